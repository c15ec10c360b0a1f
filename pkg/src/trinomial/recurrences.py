"""Three-term recurrences for the diagonals of (1 + x + x^2)^n.

The central coefficients satisfy

    (n + 2) p(n+2) = (2n + 3) p(n+1) + 3 (n + 1) p(n)

and the diagonal lam places off center satisfies the same shape with the
leading factor deformed:

    z(n+2) = (n + 2) / ((n + 2)^2 - lam^2) * ((2n + 3) z(n+1) + 3 (n + 1) z(n)).

Every step divides by (n + 2)^2 - lam^2, which is positive for all steps
taken here; that and the integrality of every produced value are asserted
rather than trusted, since a wrong recurrence usually announces itself as
a fraction long before it produces a plausible-looking wrong integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import as_integer

__all__ = ["DiagonalSequence", "central_sequence", "general_sequence"]


@dataclass(frozen=True)
class DiagonalSequence:
    """Values z(0, lam) .. z(max_n, lam) of one diagonal.

    values[n] is the coefficient of x^(n+lam) in (1 + x + x^2)^n; entries
    with n < lam are zero.  The method tag records which route produced
    the numbers.
    """

    lam: int
    values: tuple[int, ...]
    method: str = "recurrence"

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


def central_sequence(max_n: int) -> DiagonalSequence:
    """Central coefficients p(0..max_n) from the three-term recurrence."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    values = [1, 1][: max_n + 1]
    for m in range(2, max_n + 1):
        n = m - 2
        nxt = values[m - 1] + Fraction(n + 1, n + 2) * (values[m - 1] + 3 * values[m - 2])
        values.append(as_integer(nxt))
    return DiagonalSequence(0, tuple(values), "recurrence")


def general_sequence(lam: int, max_n: int) -> DiagonalSequence:
    """Diagonal z(0..max_n, lam) from the deformed three-term recurrence.

    Seeds: z(n) = 0 for n < lam, z(lam) = 1, z(lam + 1) = lam + 1.  The
    second seed is consistent with running the recurrence one step early,
    but it is pinned explicitly so the recurrence is only ever exercised
    on the region it is claimed for.
    """
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    values = [0] * min(lam, max_n + 1)
    if lam <= max_n:
        values.append(1)
    if lam + 1 <= max_n:
        values.append(lam + 1)
    for m in range(lam + 2, max_n + 1):
        n = m - 2
        denom = (n + 2) ** 2 - lam * lam
        assert denom > 0, f"recurrence used outside its region: n={n}, lam={lam}"
        nxt = Fraction(n + 2, denom) * (
            (2 * n + 3) * values[m - 1] + 3 * (n + 1) * values[m - 2]
        )
        values.append(as_integer(nxt))
    return DiagonalSequence(lam, tuple(values), "recurrence")
