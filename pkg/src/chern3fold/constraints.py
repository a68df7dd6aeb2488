"""Inequality catalog for threefold profiles, with exact rational margins.

Every check returns its margin as an exact rational, normalized so that a
non-negative margin means the inequality holds (strict checks are flagged
separately).  The catalog ids are fixed:

    ghit        d HK^2 <= (H^2K)^2            (generalized Hodge index)
    genus       2g - 2 <= d^2/s + d(s-4)      (genus of the curve section)
    castelnuovo chi within the Castelnuovo window for p_g
    boss        -24 chi >= d^4/s^3 + lower-order terms (BOSS boundedness)
    prop1i      9 H^2K + HK^2 >= d(d-21)      (s2H of N(-1) non-negative)
    prop1ii     K^3 >= 8d(d-13) + 2(d-33) H^2K - 14 HK^2   (s3 >= 0)
    prop2i      H^2K <= d^2/s + d(s-6)        (sharp adjunction form)
    prop2ii     HK^2 <= d^3/s^2 + lower-order terms
    prop2iii    K^3 >= d^4/s^3 + lower-order terms
    prop5       f HK^2 < (d - delta) H^2K     (parametrized, strict)
    prop6       a Delta1 + b Delta2 < K^3     (parametrized, strict)

The asymptotic statements (boss, prop2ii, prop2iii) carry unspecified
lower-order terms, handled by a three-mode :class:`SlackPolicy`:

* ``strict`` drops the lower-order terms entirely - correct only in the
  large-degree limit and guaranteed to misfire at small degree;
* ``slack`` subtracts coefficient * d**exponent from the leading term; the
  policy exponent (default 7/2, i.e. the next half-integer power below
  d^4) applies to boss, while prop2ii/prop2iii use exponent one below
  their leading degree (2 and 3);
* ``asymptotic`` is for family sweeps: it produces the exact ratio of the
  checked quantity to its leading term instead of a pass/fail answer.

Fractional exponents are evaluated through exact integer roots (floor), so
margins stay rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chow import twisted_normal_segre
from .invariants import InvariantTuple, deltas


class InapplicableError(ValueError):
    """The check's hypotheses exclude the given parameters."""


_MODES = ("strict", "slack", "asymptotic")

CHECK_ORDER = ("ghit", "genus", "castelnuovo", "boss",
               "prop1i", "prop1ii", "prop2i", "prop2ii", "prop2iii")

PARAMETRIZED_IDS = ("prop5", "prop6")

_NEEDS_S = frozenset({"genus", "boss", "prop2i", "prop2ii", "prop2iii"})


@dataclass(frozen=True)
class SlackPolicy:
    mode: str = "slack"
    coefficient: Fraction = Fraction(1)
    exponent: Fraction = Fraction(7, 2)

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        if self.coefficient < 0:
            raise ValueError(f"slack coefficient must be >= 0, got {self.coefficient}")

    @classmethod
    def strict(cls) -> "SlackPolicy":
        return cls(mode="strict")

    @classmethod
    def asymptotic(cls) -> "SlackPolicy":
        return cls(mode="asymptotic")


@dataclass(frozen=True)
class CastelnuovoBounds:
    """Genus and chi window at degree d, with M = floor((d-1)/2).

    pg_x_max bounds the geometric genus of the threefold, pg_y_max that of
    its general hyperplane surface section.  With h^1(O_X) = 0 the Euler
    characteristic chi = 1 + h^2(O_X) - p_g then lies in
    [1 - pg_x_max, 1 + pg_y_max].
    """

    M: int
    pg_x_max: int
    pg_y_max: int
    chi_min: int
    chi_max: int

    def chi_margin(self, chi: int) -> int:
        """Distance to the nearer window edge; >= 0 iff chi is inside."""
        return min(chi - self.chi_min, self.chi_max - chi)


@dataclass(frozen=True)
class ConstraintEntry:
    constraint_id: str
    satisfied: bool
    margin: Fraction
    note: str = ""


@dataclass(frozen=True)
class ConstraintReport:
    """Per-constraint outcomes; every entry has margin >= 0 iff satisfied."""

    entries: tuple[ConstraintEntry, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        for e in self.entries:
            if (e.margin >= 0) != e.satisfied:
                raise ValueError(
                    f"entry {e.constraint_id}: satisfied={e.satisfied} "
                    f"contradicts margin={e.margin}"
                )

    @property
    def all_satisfied(self) -> bool:
        return all(e.satisfied for e in self.entries)

    def violated(self) -> tuple[ConstraintEntry, ...]:
        return tuple(e for e in self.entries if not e.satisfied)

    def entry(self, constraint_id: str) -> ConstraintEntry:
        for e in self.entries:
            if e.constraint_id == constraint_id:
                return e
        raise KeyError(constraint_id)

    def to_rows(self) -> list[tuple[str, str, str, str]]:
        return [(e.constraint_id, "ok" if e.satisfied else "violated",
                 str(e.margin), e.note) for e in self.entries]


def _nth_root_floor(n: int, q: int) -> int:
    """floor(n ** (1/q)) for integers n >= 0, q >= 1, by binary search."""
    if n < 0 or q < 1:
        raise ValueError("need n >= 0 and q >= 1")
    if q == 1 or n in (0, 1):
        return n
    hi = 1 << ((n.bit_length() + q - 1) // q + 1)
    lo = 0
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid ** q <= n:
            lo = mid
        else:
            hi = mid
    return lo


def _power_floor(d: int, exponent: Fraction) -> Fraction:
    """floor(d ** exponent) as an exact Fraction, for d >= 1, exponent >= 0."""
    p, q = exponent.numerator, exponent.denominator
    if p < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    return Fraction(_nth_root_floor(d ** p, q))


def ghit_check(t: InvariantTuple) -> tuple[bool, int]:
    """Hodge index inequality d HK^2 <= (H^2K)^2; margin (H^2K)^2 - d HK^2."""
    margin = t.h2k * t.h2k - t.d * t.hk2
    return (margin >= 0, margin)


def genus_check(t: InvariantTuple, s: int) -> tuple[bool, Fraction]:
    """Curve-section genus bound 2g - 2 <= d^2/s + d(s-4), exact."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    margin = Fraction(t.d * t.d, s) + t.d * (s - 4) - (t.h2k + 2 * t.d)
    return (margin >= 0, margin)


@lru_cache(maxsize=None)
def castelnuovo_bounds(d: int) -> CastelnuovoBounds:
    """Castelnuovo window at degree d.  Binomials vanish when M < k."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    M = (d - 1) // 2
    pg_x = 2 * math.comb(M, 4) + math.comb(M, 3)
    pg_y = 2 * math.comb(M, 3) + math.comb(M, 2)
    return CastelnuovoBounds(M=M, pg_x_max=pg_x, pg_y_max=pg_y,
                             chi_min=1 - pg_x, chi_max=1 + pg_y)


def boss_check(t: InvariantTuple, s: int, policy: SlackPolicy):
    """BOSS boundedness: -24 chi >= d^4/s^3 + lower-order terms.

    strict/slack modes return (satisfied, margin); asymptotic mode returns
    the exact ratio (-24 chi) s^3 / d^4, the natural quantity to track
    along a family where the bound is approached.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    neg24chi = -24 * t.chi
    if policy.mode == "asymptotic":
        return Fraction(neg24chi * s ** 3, t.d ** 4)
    margin = neg24chi - Fraction(t.d ** 4, s ** 3)
    if policy.mode == "slack":
        margin += policy.coefficient * _power_floor(t.d, policy.exponent)
    return (margin >= 0, margin)


def segre_positivity_check(t: InvariantTuple) -> tuple[bool, int, bool, int]:
    """Non-negativity of the N(-1) numbers; the margins are those numbers.

    Returns (satisfied_i, margin_i, satisfied_ii, margin_ii) where
    margin_i = s2H and margin_ii = s3 of the twisted normal bundle.
    """
    data = twisted_normal_segre(t)
    return (data.s2H >= 0, data.s2H, data.s3 >= 0, data.s3)


def leading_term_checks(t: InvariantTuple, s: int,
                        policy: SlackPolicy) -> tuple[ConstraintEntry, ...]:
    """Leading-term bounds on H^2K, HK^2, K^3 at containment degree s.

    The H^2K bound is exact (it follows from the genus bound by
    adjunction, no lower-order terms needed): H^2K <= d^2/s + d(s-6).
    The HK^2 and K^3 bounds are asymptotic and honor the policy; their
    slack exponents sit one below the leading degree (2 and 3).
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if policy.mode == "asymptotic":
        raise InapplicableError(
            "asymptotic ratios come from hk2_leading_ratio / k3_leading_ratio"
        )
    d = t.d
    m1 = Fraction(d * d, s) + d * (s - 6) - t.h2k
    m2 = Fraction(d ** 3, s ** 2) - t.hk2
    m3 = t.k3 - Fraction(d ** 4, s ** 3)
    if policy.mode == "slack":
        m2 += policy.coefficient * d ** 2
        m3 += policy.coefficient * d ** 3
    note = f"mode={policy.mode}"
    return (
        ConstraintEntry("prop2i", m1 >= 0, Fraction(m1), "exact"),
        ConstraintEntry("prop2ii", m2 >= 0, Fraction(m2), note),
        ConstraintEntry("prop2iii", m3 >= 0, Fraction(m3), note),
    )


def hk2_leading_ratio(t: InvariantTuple, s: int) -> Fraction:
    """HK^2 s^2 / d^3, the exact ratio to its leading bound."""
    return Fraction(t.hk2 * s * s, t.d ** 3)


def k3_leading_ratio(t: InvariantTuple, s: int) -> Fraction:
    """K^3 s^3 / d^4, the exact ratio to its leading bound."""
    return Fraction(t.k3 * s ** 3, t.d ** 4)


def min_degree_rhs(k: int, d: int) -> Fraction:
    """Section-count budget at twist k = s - 1 for a degree-d threefold:

        k^3 d/6 + d^2/2 + d^3/(6k) + k d^2/4 + d^3/24

    (Riemann-Roch leading term, the H^2K and HK^2 budgets, the curve-level
    h^1 estimate, and the Castelnuovo bound on h^2; unquantified
    lower-order terms dropped.)
    """
    if k < 1 or d < 1:
        raise ValueError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return (Fraction(k ** 3 * d, 6) + Fraction(d * d, 2) + Fraction(d ** 3, 6 * k)
            + Fraction(k * d * d, 4) + Fraction(d ** 3, 24))


def min_degree_for_s(s: int) -> int:
    """Smallest degree compatible with lying on no hypersurface of degree < s.

    With k = s - 1, the count of degree-k forms on P^5 must fit under the
    section budget: C(k+5, 5) <= min_degree_rhs(k, d).  The budget is
    strictly increasing in d, so the comparison is resolved by binary
    search on the equivalent integer inequality (both sides times 24k):

        (4+k) d^3 + 6k(k+2) d^2 + 4 k^4 d >= 24 k C(k+5, 5).
    """
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    k = s - 1
    target = 24 * k * math.comb(k + 5, 5)

    def fits(d: int) -> bool:
        return (4 + k) * d ** 3 + 6 * k * (k + 2) * d ** 2 + 4 * k ** 4 * d >= target

    hi = 1
    while not fits(hi):
        hi *= 2
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if fits(mid):
            hi = mid
        else:
            lo = mid
    return hi


def slope_check(t: InvariantTuple, f, delta) -> tuple[bool, Fraction]:
    """Strict slope comparison f HK^2 < (d - delta) H^2K.

    Evaluated for any profile; the hypothesis H^2K, HK^2 > 0 under which
    the comparison is meaningful is reported separately (see
    :func:`positivity_flags`).  Satisfied iff the margin is positive.
    """
    margin = (t.d - Fraction(delta)) * t.h2k - Fraction(f) * t.hk2
    return (margin > 0, margin)


def slope_exception_bound(f, delta, s: int) -> Fraction:
    """Degree threshold below which the slope comparison can fail:

        d < f s + f (f - 6 + delta/f) + f^2 (f - 6 + delta/f) / (s - f).

    Requires f > 0 and s != f.
    """
    f = Fraction(f)
    delta = Fraction(delta)
    if f <= 0:
        raise InapplicableError(f"requires f > 0, got f={f}")
    if s == f:
        raise InapplicableError(f"s = f = {s} makes the bound inapplicable")
    d1 = delta / f
    return f * s + f * (f - 6 + d1) + f * f * (f - 6 + d1) / (s - f)


def f_of_ab(a, b) -> Fraction:
    """Slope parameter f = (6 - 6a - 6b) / (2 - a - 2b); needs 2 - a - 2b > 0."""
    a, b = Fraction(a), Fraction(b)
    denom = 2 - a - 2 * b
    if denom <= 0:
        raise InapplicableError(f"requires 2 - a - 2b > 0, got {denom}")
    return (6 - 6 * a - 6 * b) / denom


def delta_combination_check(t: InvariantTuple, a, b) -> tuple[bool, Fraction]:
    """Strict comparison a Delta1 + b Delta2 < K^3, for 2 - a - 2b > 0."""
    a, b = Fraction(a), Fraction(b)
    if 2 - a - 2 * b <= 0:
        raise InapplicableError(f"requires 2 - a - 2b > 0, got {2 - a - 2 * b}")
    dd = deltas(t)
    margin = t.k3 - a * dd.delta1 - b * dd.delta2
    return (margin > 0, margin)


def positivity_flags(t: InvariantTuple) -> dict[str, bool]:
    """Positivity of the mixed K-numbers (the limit-statement hypothesis)."""
    return {"h2k": t.h2k > 0, "hk2": t.hk2 > 0, "k3": t.k3 > 0}


def check_all(t: InvariantTuple, s: int | None = None,
              policy: SlackPolicy | None = None,
              ids=None) -> ConstraintReport:
    """Run the catalog against one profile and collect a report.

    One entry per requested id, in the fixed catalog order (all nine
    non-parametrized checks by default).  ``s`` falls back to ``t.s``;
    the checks that need it refuse to run without one.  Asymptotic
    policies are rejected here: ratio diagnostics belong to family
    sweeps, not pass/fail reports.
    """
    policy = policy if policy is not None else SlackPolicy()
    if policy.mode == "asymptotic":
        raise InapplicableError(
            "check_all needs a strict or slack policy; asymptotic ratios "
            "are for family sweeps"
        )
    chosen = CHECK_ORDER if ids is None else tuple(ids)
    unknown = [i for i in chosen if i not in CHECK_ORDER]
    if unknown:
        raise ValueError(f"unknown constraint ids: {unknown}")
    selected = set(chosen)
    order = tuple(i for i in CHECK_ORDER if i in selected)
    s_eff = s if s is not None else t.s
    if s_eff is None and _NEEDS_S & selected:
        needed = ", ".join(sorted(_NEEDS_S & selected))
        raise ValueError(f"s is required for: {needed}")

    leading = None
    if {"prop2i", "prop2ii", "prop2iii"} & selected:
        leading = {e.constraint_id: e for e in leading_term_checks(t, s_eff, policy)}

    entries = []
    for cid in order:
        if cid == "ghit":
            ok, margin = ghit_check(t)
            entries.append(ConstraintEntry(cid, ok, Fraction(margin)))
        elif cid == "genus":
            ok, margin = genus_check(t, s_eff)
            entries.append(ConstraintEntry(cid, ok, margin, f"s={s_eff}"))
        elif cid == "castelnuovo":
            cb = castelnuovo_bounds(t.d)
            margin = cb.chi_margin(t.chi)
            entries.append(ConstraintEntry(
                cid, margin >= 0, Fraction(margin),
                f"chi window [{cb.chi_min}, {cb.chi_max}]"))
        elif cid == "boss":
            ok, margin = boss_check(t, s_eff, policy)
            entries.append(ConstraintEntry(cid, ok, margin, f"mode={policy.mode}"))
        elif cid == "prop1i":
            ok_i, m_i, _, _ = segre_positivity_check(t)
            entries.append(ConstraintEntry(cid, ok_i, Fraction(m_i)))
        elif cid == "prop1ii":
            _, _, ok_ii, m_ii = segre_positivity_check(t)
            entries.append(ConstraintEntry(cid, ok_ii, Fraction(m_ii)))
        else:
            entries.append(leading[cid])

    notes = ()
    nonpositive = [name.upper() for name, positive in
                   (("h2k", t.h2k > 0), ("hk2", t.hk2 > 0), ("k3", t.k3 > 0))
                   if not positive]
    if nonpositive:
        notes = ("positivity fails for " + ", ".join(nonpositive),)
    return ConstraintReport(tuple(entries), notes)
