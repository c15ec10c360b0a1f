"""A first look at the coefficient triangle of (1 + x + x^2)^n.

Builds the triangle by plain polynomial multiplication and shows the
structure the rest of the package is built on: palindromic rows, row sums
3^n, and the closed forms for the first few coefficients of every row.
"""

from __future__ import annotations

from trinomial import build_triangle, leading_term_check

ROWS_TO_SHOW = 9


def main() -> None:
    tri = build_triangle(16)

    print("rows 0..%d, centered:" % ROWS_TO_SHOW)
    width = len("  ".join(str(v) for v in tri.row(ROWS_TO_SHOW)))
    for n in range(ROWS_TO_SHOW + 1):
        text = "  ".join(str(v) for v in tri.row(n))
        print(f"n={n:2d}  " + text.center(width))

    print()
    print("every row reads the same in both directions, and sums to 3^n:")
    for n in (4, 9, 16):
        row = tri.row(n)
        print(
            f"  n={n:2d}: palindrome={row == row[::-1]}, "
            f"sum={sum(row)} = 3^{n}"
        )

    print()
    print("the k-th entry of row n follows a fixed polynomial in n; for")
    print("instance T(n,2) = n(n+1)/2 and T(n,3) = n(n-1)(n+4)/6:")
    for n in (3, 7, 12, 16):
        print(
            f"  n={n:2d}: T={tri.row(n)[:4]}..., closed forms agree: "
            f"{leading_term_check(tri, n)}"
        )

    print()
    print("the central column p(n) = T(n, n), the main object here:")
    print(" ", [tri.coeff(n, n) for n in range(13)])


if __name__ == "__main__":
    main()
