"""Rough cost comparison of the computation routes.

Times each registered method producing p(0..max_n) with caches cleared
first.  Nothing scientific, but the shape is instructive: the recurrence
is linear and wins, the sums pay a quadratic number of binomial products,
and the series route pays for exact rational convolutions.
"""

from __future__ import annotations

import time

from trinomial import METHOD_NAMES, central_values
from trinomial.methods import clear_caches


def main() -> None:
    for max_n in (50, 150):
        print(f"p(0..{max_n}):")
        for method in METHOD_NAMES:
            clear_caches()
            start = time.perf_counter()
            values = central_values(method, max_n)
            elapsed = time.perf_counter() - start
            per_value = 1e9 * elapsed / (max_n + 1)
            print(f"  {method:10s} {elapsed * 1e3:8.2f} ms   {per_value:10.0f} ns/value")
        digits = len(str(values[-1]))
        print(f"  (p({max_n}) has {digits} digits)")
        print()


if __name__ == "__main__":
    main()
