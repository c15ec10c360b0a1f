"""Uniform access to every route that computes a diagonal.

Each method takes (lam, max_n) and returns the integers z(0..max_n, lam).
Having one registry keeps the cross-checking honest: the CLI, the
benchmark, and the consistency tests all draw from the same table, so no
route can quietly drop out of the comparison.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Optional

from . import diagonal_sums, differences, recurrences, series, triangle

__all__ = [
    "METHOD_NAMES",
    "diagonal_values",
    "central_values",
    "first_mismatch",
    "clear_caches",
]


@lru_cache(maxsize=4)
def _shared_triangle(max_n: int) -> triangle.TrinomialTriangle:
    return triangle.build_triangle(max_n)


@lru_cache(maxsize=4)
def _central_base(max_n: int) -> tuple[int, ...]:
    return recurrences.central_sequence(max_n).values


def _by_oracle(lam: int, max_n: int) -> list[int]:
    tri = _shared_triangle(max_n)
    return [tri.coeff(n, n + lam) for n in range(max_n + 1)]


def _by_sum(form: Callable[[int, int], int]) -> Callable[[int, int], list[int]]:
    def values(lam: int, max_n: int) -> list[int]:
        return [form(n, lam) for n in range(max_n + 1)]

    return values


def _by_ratio(lam: int, max_n: int) -> list[int]:
    return [diagonal_sums.z_term_ratio(n, lam)[0] for n in range(max_n + 1)]


def _by_recurrence(lam: int, max_n: int) -> list[int]:
    return list(recurrences.general_sequence(lam, max_n).values)


def _by_delta(lam: int, max_n: int) -> list[int]:
    # The difference formulas express diagonal lam through the central
    # column, so lam = 0 is the central column itself.
    base = _central_base(max_n + lam)
    if lam == 0:
        return list(base)
    table = differences.build_difference_table(base, lam)
    return [differences.z_from_differences(table, lam, n) for n in range(max_n + 1)]


def _by_series(lam: int, max_n: int) -> list[int]:
    # Z[lam] starts at x^(2 lam), so entries with n < lam come out zero
    # without special-casing.
    ints = series.gf_Z(lam, max_n + lam).integer_coefficients()
    return [ints[n + lam] for n in range(max_n + 1)]


_METHODS: dict[str, Callable[[int, int], list[int]]] = {
    "oracle": _by_oracle,
    "sum1": _by_sum(diagonal_sums.z_sum_form1),
    "sum2": _by_sum(diagonal_sums.z_sum_form2),
    "sum3": _by_sum(diagonal_sums.z_sum_form3),
    "ratio": _by_ratio,
    "recurrence": _by_recurrence,
    "delta": _by_delta,
    "series": _by_series,
}

METHOD_NAMES: tuple[str, ...] = tuple(_METHODS)


def diagonal_values(method: str, lam: int, max_n: int) -> list[int]:
    """z(0..max_n, lam) computed by the named method."""
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHOD_NAMES}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    return _METHODS[method](lam, max_n)


def central_values(method: str, max_n: int) -> list[int]:
    """p(0..max_n) computed by the named method."""
    return diagonal_values(method, 0, max_n)


def first_mismatch(
    max_n: int, methods: Optional[list[str]] = None
) -> Optional[tuple[str, int, int, int, int]]:
    """Compare every method against the oracle for all 0 <= lam <= n <= max_n.

    Returns None if everything agrees, otherwise
    (method, lam, n, got, expected) for the first disagreement.
    """
    chosen = list(methods) if methods is not None else list(METHOD_NAMES)
    for name in chosen:
        if name not in _METHODS:
            raise ValueError(f"unknown method {name!r}; choose from {METHOD_NAMES}")
    for lam in range(max_n + 1):
        reference = _by_oracle(lam, max_n)
        for name in chosen:
            if name == "oracle":
                continue
            got = diagonal_values(name, lam, max_n)
            for n in range(max_n + 1):
                if got[n] != reference[n]:
                    return name, lam, n, got[n], reference[n]
    return None


def clear_caches() -> None:
    """Drop memoized triangles, central columns, and generating functions.

    The benchmark calls this so timings measure work, not cache hits.
    """
    _shared_triangle.cache_clear()
    _central_base.cache_clear()
    series.gf_P.cache_clear()
    series.gf_nu.cache_clear()
    series.gf_Z.cache_clear()
