"""Ratio-plane geography: fixed-degree enumeration and family sweeps.

Two complementary ways of populating the (x, y) = (c1^3/c1c2, c3/c1c2)
plane:

* :func:`enumerate_feasible` lists every integer profile of a fixed degree
  d that survives the inequality catalog.  The search region is finite:
  H^2K is even (integrality of the curve-section genus) and bounded by the
  sharpened genus bound d^2/s + d(s-6); HK^2 is bounded by the Hodge index
  inequality (H^2K)^2 / d; chi ranges over the Castelnuovo window; K^3 is
  then determined.  The asymptotic bounds (boss, prop2ii, prop2iii) are
  excluded by default - they misfire at desk-scale degrees and would
  silently empty the cloud - and can be re-enabled with a chosen policy.

* :func:`family_trace` sweeps complete-intersection families.  Along
  CI(s, t) with s fixed and t growing, and along the diagonal CI(t, t),
  the ratio points accumulate on the segment x + y = 2, 1 <= x <= 2; the
  trace records each point's exact squared distance to that segment.

Distances are kept squared so that everything stays in Q; take roots at
presentation time only.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
import math

from .chow import CompleteIntersection, ci_invariants
from .constraints import (
    CHECK_ORDER,
    InapplicableError,
    SlackPolicy,
    castelnuovo_bounds,
    check_all,
)
from .invariants import (
    ChernRatios,
    InvariantTuple,
    RatiosUndefinedError,
    chern_from_invariants,
    ratios,
)

# Closed target segment from (1, 1) to (2, 0) on the line x + y = 2.
SEGMENT_START = (Fraction(1), Fraction(1))
SEGMENT_END = (Fraction(2), Fraction(0))

# Reference endpoints of the codimension-2 dependency-locus segment,
# kept as display constants only.
REFERENCE_SEGMENT = ((Fraction(1), Fraction(1)), (Fraction(17, 12), Fraction(7, 12)))

# Constraint ids applied during fixed-degree enumeration; the asymptotic
# trio is appended only on request.
ENUMERATION_IDS = ("ghit", "genus", "castelnuovo", "prop1i", "prop1ii", "prop2i")
ASYMPTOTIC_IDS = ("boss", "prop2ii", "prop2iii")

DEGREE_CAP = 60

_FAMILY_KINDS = ("ci_fixed_s", "ci_diagonal", "explicit_list")


@dataclass(frozen=True)
class FamilySpec:
    """A one-parameter family of profiles to sweep.

    kind "ci_fixed_s" walks CI(s_fixed, t); "ci_diagonal" walks CI(t, t);
    "explicit_list" walks the given members, indexed by t over t_range.
    """

    kind: str
    t_range: tuple[int, int]
    s_fixed: int | None = None
    members: tuple[InvariantTuple, ...] | None = None

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise ValueError(f"kind must be one of {_FAMILY_KINDS}, got {self.kind!r}")
        t_min, t_max = self.t_range
        if t_min > t_max:
            raise ValueError(f"empty t range [{t_min}, {t_max}]")
        if self.kind == "ci_fixed_s":
            if self.s_fixed is None or self.s_fixed < 2:
                raise ValueError("ci_fixed_s needs s_fixed >= 2")
            if t_min < 2:
                raise ValueError("complete-intersection degrees start at 2")
        if self.kind == "ci_diagonal" and t_min < 2:
            raise ValueError("complete-intersection degrees start at 2")
        if self.kind == "explicit_list":
            if not self.members:
                raise ValueError("explicit_list needs members")
            if len(self.members) != t_max - t_min + 1:
                raise ValueError("explicit_list members must match the t range")

    @classmethod
    def ci_fixed_s(cls, s: int, t_min: int, t_max: int) -> "FamilySpec":
        return cls(kind="ci_fixed_s", t_range=(t_min, t_max), s_fixed=s)

    @classmethod
    def ci_diagonal(cls, t_min: int, t_max: int) -> "FamilySpec":
        return cls(kind="ci_diagonal", t_range=(t_min, t_max))

    def describe(self) -> dict:
        desc = {"kind": self.kind, "t_min": self.t_range[0], "t_max": self.t_range[1]}
        if self.s_fixed is not None:
            desc["s_fixed"] = self.s_fixed
        return desc


@dataclass(frozen=True)
class TracePoint:
    t: int
    invariants: InvariantTuple
    ratios: ChernRatios | None
    dist_sq: Fraction | None


@dataclass(frozen=True)
class FamilyTrace:
    spec: FamilySpec
    points: tuple[TracePoint, ...]


@dataclass(frozen=True)
class CloudEntry:
    invariants: InvariantTuple
    ratios: ChernRatios | None


@dataclass(frozen=True)
class CloudMeta:
    d: int
    s: int
    positivity: bool
    asymptotic_included: bool
    policy: SlackPolicy
    count: int


@dataclass(frozen=True)
class RatioCloud:
    entries: tuple[CloudEntry, ...]
    metadata: CloudMeta


@dataclass(frozen=True)
class ClaimBands:
    """Band membership of one ratio point for the limit-segment claims.

    claim1:  y < -x + 2 + eps          (upper band through the segment)
    claim2:  y > -alpha x + 1 + alpha - eps   (lower band, alpha > 1)
    lower_x: x > 1 - eps
    lower_y: y > -eps
    """

    claim1: bool
    claim2: bool
    lower_x: bool
    lower_y: bool

    @property
    def all_true(self) -> bool:
        return self.claim1 and self.claim2 and self.lower_x and self.lower_y


def segment_distance(x, y) -> Fraction:
    """Squared distance from (x, y) to the closed segment (1,1)-(2,0).

    Project onto the carrier line x + y = 2, clamp the foot to the
    segment, return the exact squared distance to the clamped point.
    """
    x, y = Fraction(x), Fraction(y)
    foot_x = (2 + x - y) / 2
    foot_x = min(max(foot_x, Fraction(1)), Fraction(2))
    foot_y = 2 - foot_x
    return (x - foot_x) ** 2 + (y - foot_y) ** 2


def claim_bands(r: ChernRatios, epsilon, alpha) -> ClaimBands:
    """Evaluate the four limit-band inequalities at one ratio point."""
    eps, al = Fraction(epsilon), Fraction(alpha)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if al <= 1:
        raise ValueError(f"alpha must exceed 1, got {al}")
    return ClaimBands(
        claim1=r.y < -r.x + 2 + eps,
        claim2=r.y > -al * r.x + 1 + al - eps,
        lower_x=r.x > 1 - eps,
        lower_y=r.y > -eps,
    )


def claim_parameters(epsilon, alpha) -> tuple[tuple[Fraction, Fraction],
                                              tuple[Fraction, Fraction]]:
    """(a, b) pairs that turn the two band claims into Delta comparisons.

    claim1 uses (1 + 2/eps, -1/eps); claim2 uses (1 - (1+alpha)/eps,
    1/eps).  Both land in the admissible region 2 - a - 2b > 0: the first
    gives exactly 1, the second 1 + (alpha-1)/eps.
    """
    eps, al = Fraction(epsilon), Fraction(alpha)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    if al <= 1:
        raise ValueError(f"alpha must exceed 1, got {al}")
    first = (1 + 2 / eps, -1 / eps)
    second = (1 - (1 + al) / eps, 1 / eps)
    for a, b in (first, second):
        if 2 - a - 2 * b <= 0:
            raise ArithmeticError(f"band parameters ({a}, {b}) left the admissible region")
    return (first, second)


def family_trace(spec: FamilySpec) -> FamilyTrace:
    """Sweep the family, flagging (never dropping) undefined ratio points."""
    t_min, t_max = spec.t_range
    points = []
    for index, t in enumerate(range(t_min, t_max + 1)):
        if spec.kind == "ci_fixed_s":
            inv = ci_invariants(CompleteIntersection(spec.s_fixed, t))
        elif spec.kind == "ci_diagonal":
            inv = ci_invariants(CompleteIntersection(t, t))
        else:
            inv = spec.members[index]
        try:
            r = ratios(chern_from_invariants(inv))
            dist = segment_distance(r.x, r.y)
        except RatiosUndefinedError:
            r = None
            dist = None
        points.append(TracePoint(t=t, invariants=inv, ratios=r, dist_sq=dist))
    return FamilyTrace(spec=spec, points=tuple(points))


def _scan_h2k(d, s, policy, positivity, ids, chi_min, chi_max, h2k_values):
    """Enumerate one slice of the h2k range; loops mirror check_all exactly."""
    found = []
    for h2k in h2k_values:
        hk2_top = (h2k * h2k) // d
        k3_lead = (d - 15) * h2k
        s2h_base = 9 * h2k - d * (d - 21)
        s3_base = -8 * d * (d - 13) - 2 * (d - 33) * h2k
        for hk2 in range(1, hk2_top + 1):
            if s2h_base + hk2 < 0:  # prop1i, chi-independent
                continue
            k3_at_chi0 = k3_lead - 6 * hk2
            s3_offset = s3_base + 14 * hk2
            # k3 = k3_at_chi0 - 24 chi decreases in chi; cap chi so the
            # chi-monotone filters (k3 >= 1, prop1ii) can still pass.
            chi_top = chi_max
            if positivity:
                chi_top = min(chi_top, (k3_at_chi0 - 1) // 24)
            chi_top = min(chi_top, (k3_at_chi0 + s3_offset) // 24)
            for chi in range(chi_min, chi_top + 1):
                k3 = k3_at_chi0 - 24 * chi
                inv = InvariantTuple(d=d, h2k=h2k, hk2=hk2, k3=k3, chi=chi, s=s)
                report = check_all(inv, s, policy, ids)
                if not report.all_satisfied:
                    continue
                try:
                    r = ratios(chern_from_invariants(inv))
                except RatiosUndefinedError:
                    r = None
                found.append(CloudEntry(invariants=inv, ratios=r))
    return found


def enumerate_feasible(d: int, s: int, policy: SlackPolicy | None = None,
                       positivity: bool = False, *,
                       include_asymptotic: bool = False,
                       workers: int = 1,
                       d_max_override: bool = False) -> RatioCloud:
    """All integer profiles of degree d surviving the catalog at this s.

    positivity restricts to the limit-statement hypothesis H^iK^j > 0
    (h2k >= 2 even, hk2 >= 1, k3 >= 1); otherwise h2k also runs negative
    and k3 is unconstrained.  Entries come out in lexicographic
    (h2k, hk2, chi) order regardless of the worker count; empty ranges
    yield an empty cloud, not an error.
    """
    if d < 1 or s < 1:
        raise ValueError(f"need d >= 1 and s >= 1, got d={d}, s={s}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    policy = policy if policy is not None else SlackPolicy()
    if policy.mode == "asymptotic":
        raise InapplicableError("enumeration needs a strict or slack policy")
    if d > DEGREE_CAP and not d_max_override:
        raise ValueError(
            f"degree {d} exceeds the default cap {DEGREE_CAP}; the loop is "
            "O(d^4 * chi-window), pass d_max_override=True to force it"
        )

    wanted = set(ENUMERATION_IDS)
    if include_asymptotic:
        wanted |= set(ASYMPTOTIC_IDS)
    ids = tuple(i for i in CHECK_ORDER if i in wanted)

    cb = castelnuovo_bounds(d)
    h2k_top = math.floor(Fraction(d * d, s) + d * (s - 6))
    h2k_top -= h2k_top % 2
    h2k_lo = 2 if positivity else -h2k_top
    h2k_values = list(range(h2k_lo, h2k_top + 1, 2)) if h2k_top >= h2k_lo else []

    def run(values):
        return _scan_h2k(d, s, policy, positivity, ids,
                         cb.chi_min, cb.chi_max, values)

    if workers == 1 or len(h2k_values) <= 1:
        entries = run(h2k_values)
    else:
        size = -(-len(h2k_values) // workers)
        chunks = [h2k_values[i:i + size] for i in range(0, len(h2k_values), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = [e for part in pool.map(run, chunks) for e in part]

    entries.sort(key=lambda e: (e.invariants.h2k, e.invariants.hk2, e.invariants.chi))
    meta = CloudMeta(d=d, s=s, positivity=positivity,
                     asymptotic_included=include_asymptotic,
                     policy=policy, count=len(entries))
    return RatioCloud(entries=tuple(entries), metadata=meta)
