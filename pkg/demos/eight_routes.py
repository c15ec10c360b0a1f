"""Eight routes to the same integers.

Every registered method computes the diagonal z(n, lam) of
(1 + x + x^2)^n from different raw material: brute-force expansion,
three distinct binomial double-sum reindexings, a term-by-term ratio
product, a three-term recurrence, forward differences of the central
column, and exact power series.  If any two ever disagree, something is
wrong; this script shows them agreeing and shows the internals of the
ratio route.
"""

from __future__ import annotations

from trinomial import METHOD_NAMES, central_values, diagonal_values, z_term_ratio

MAX_N = 12


def main() -> None:
    print(f"p(0..{MAX_N}) by every method:")
    rows = {m: central_values(m, MAX_N) for m in METHOD_NAMES}
    header = "n".rjust(12) + "".join(str(n).rjust(7) for n in range(MAX_N + 1))
    print(header)
    for method, values in rows.items():
        print(method.rjust(12) + "".join(str(v).rjust(7) for v in values))
    agree = len({tuple(v) for v in rows.values()}) == 1
    print(f"all methods agree: {agree}")

    print()
    print("the ratio route in slow motion, n = 12:")
    total, terms = z_term_ratio(12, 0)
    print(f"  terms: {terms}")
    print("  each term is the previous one times a simple rational;")
    print(f"  for instance {terms[3]} * (6*5)/(4*4) = {terms[3] * 30 // 16}")
    print(f"  total: {total}")

    print()
    print("an off-center diagonal, lam = 2, by three unrelated routes:")
    for method in ("sum3", "delta", "series"):
        print(f"  {method:10s} {diagonal_values(method, 2, 8)}")


if __name__ == "__main__":
    main()
