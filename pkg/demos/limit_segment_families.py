#!/usr/bin/env python3
"""Watch the ratio points accumulate on the segment x + y = 2.

Two families of complete intersections, traced with exact arithmetic:

* CI(2, t): contained in a quadric, degree 2t.  Its ratio points climb
  toward the segment endpoint (1, 1) from the x < 1 side, with the gap
  |x + y - 2| shrinking like 9/t^2.
* CI(t, t): the diagonal.  Its x coordinate climbs toward 4/3, the first
  interior stretch of the segment that complete intersections can reach.

The script prints convergence tables, reports where the eps = 1/10 claim
bands close around each family, and writes limit_segment_families.svg
with both traces over the target segment.
"""

import sys
from fractions import Fraction
from pathlib import Path

try:
    import chern3fold  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chern3fold import FamilySpec, claim_bands, family_trace
from chern3fold.output import svg_scatter


def table(label, spec, ts):
    trace = family_trace(spec)
    by_t = {p.t: p for p in trace.points}
    print(label)
    print(f"  {'t':>4} {'x':>12} {'y':>12} {'x+y-2':>12} {'dist':>10}")
    for t in ts:
        p = by_t[t]
        gap = float(p.ratios.x + p.ratios.y - 2)
        dist = float(p.dist_sq) ** 0.5
        print(f"  {t:>4} {float(p.ratios.x):>12.6f} {float(p.ratios.y):>12.6f} "
              f"{gap:>12.6f} {dist:>10.6f}")
    print()
    return trace


def band_threshold(trace, eps, alpha):
    closed_from = None
    for p in trace.points:
        if p.ratios is None or not claim_bands(p.ratios, eps, alpha).all_true:
            closed_from = None
        elif closed_from is None:
            closed_from = p.t
    return closed_from


def main():
    fixed = table("family CI(2, t), quadric-bound:",
                  FamilySpec.ci_fixed_s(2, 10, 200), (10, 20, 50, 100, 200))
    diag = table("family CI(t, t), diagonal:",
                 FamilySpec.ci_diagonal(10, 200), (10, 20, 50, 100, 200))

    eps, alpha = Fraction(1, 10), Fraction(2)
    print(f"claim bands at eps = {eps}, alpha = {alpha}:")
    print(f"  CI(2, t) all four bands hold from t = {band_threshold(fixed, eps, alpha)}"
          "  (x approaches 1 from below, so the lower bands close late)")
    print(f"  CI(t, t) all four bands hold from t = {band_threshold(diag, eps, alpha)}")

    points = [(float(p.ratios.x), float(p.ratios.y))
              for trace in (fixed, diag) for p in trace.points if p.ratios]
    out = Path(__file__).with_name("limit_segment_families.svg")
    out.write_text(svg_scatter(points), encoding="utf-8")
    print(f"\nwrote {out.name} ({len(points)} points over the target segment)")


if __name__ == "__main__":
    main()
