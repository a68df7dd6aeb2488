#!/usr/bin/env python3
"""How the containment degree forces the degree up.

A threefold lying on no hypersurface of degree below s must be large: the
space of degree-(s-1) forms on P^5 has to fit inside the section budget
of the threefold's twisted structure sheaf.  The crossing point of
C(k+5, 5) against the budget

    k^3 d/6 + d^2/2 + d^3/(6k) + k d^2/4 + d^3/24,   k = s - 1,

grows like a constant times s^(5/3).  The limiting constant from the
d^3/24 term alone is (1/5)^(1/3) ~ 0.5848, but the k^3 d/6 term carries
most of the budget until k^(1/3) is large, so the measured ratio climbs
toward the constant from below - slowly.  The table makes that visible.
"""

import sys
from math import comb
from pathlib import Path

try:
    import chern3fold  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chern3fold import min_degree_for_s, min_degree_rhs


def main():
    print(f"{'s':>7} {'min degree':>12} {'d / s^(5/3)':>12}")
    for s in (2, 3, 5, 10, 50, 250, 500, 1000, 2000, 10000):
        v = min_degree_for_s(s)
        print(f"{s:>7} {v:>12} {v / s ** (5 / 3):>12.4f}")
    print(f"{'limit':>7} {'':>12} {(1 / 5) ** (1 / 3):>12.4f}")

    # budget split at s = 1000: which terms do the work at the crossing?
    s = 1000
    k, v = s - 1, min_degree_for_s(1000)
    total = min_degree_rhs(k, v)
    print(f"\nbudget at s = {s}, crossing degree {v} "
          f"(target C(k+5,5) = {comb(k + 5, 5)}):")
    for label, term in (
        ("k^3 d / 6", k ** 3 * v / 6),
        ("d^2 / 2", v * v / 2),
        ("d^3 / 6k", v ** 3 / (6 * k)),
        ("k d^2 / 4", k * v * v / 4),
        ("d^3 / 24", v ** 3 / 24),
    ):
        print(f"  {label:>10}: {float(term) / float(total):>6.1%} of the budget")


if __name__ == "__main__":
    main()
