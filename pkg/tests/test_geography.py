"""Family sweeps, claim bands, segment distance, fixed-degree enumeration."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chern3fold import (
    ENUMERATION_IDS,
    REFERENCE_SEGMENT,
    SEGMENT_END,
    SEGMENT_START,
    ChernRatios,
    CompleteIntersection,
    FamilySpec,
    InapplicableError,
    InvariantTuple,
    SlackPolicy,
    check_all,
    ci_invariants,
    claim_bands,
    claim_parameters,
    enumerate_feasible,
    f_of_ab,
    family_trace,
    segment_distance,
)

EPS10 = Fraction(1, 10)


def ci_ratios(a, b):
    from chern3fold import chern_from_invariants, ratios
    return ratios(chern_from_invariants(ci_invariants(CompleteIntersection(a, b))))


def test_segment_distance_pinned():
    assert segment_distance(Fraction(3, 2), Fraction(1, 2)) == 0
    assert segment_distance(0, 0) == 2  # clamps to the (1, 1) endpoint
    r = ci_ratios(50, 50)
    dist = segment_distance(r.x, r.y)
    assert dist == (r.x + r.y - 2) ** 2 / 2  # interior foot, no clamping
    assert abs(float(dist) - 1.986e-4) < 1e-6


def test_segment_endpoints_lie_on_the_line():
    assert sum(SEGMENT_START) == sum(SEGMENT_END) == 2
    (p, q) = REFERENCE_SEGMENT
    assert sum(p) == sum(q) == 2
    assert q == (Fraction(17, 12), Fraction(7, 12))
    assert segment_distance(*q) == 0  # 17/12 lies inside [1, 2]


@given(st.fractions(min_value=1, max_value=2, max_denominator=500))
def test_segment_distance_zero_on_segment(x):
    assert segment_distance(x, 2 - x) == 0


@given(st.fractions(min_value=-4, max_value=5, max_denominator=60),
       st.fractions(min_value=-4, max_value=5, max_denominator=60))
def test_segment_distance_positive_off_segment(x, y):
    on_segment = (x + y == 2) and (1 <= x <= 2)
    assert (segment_distance(x, y) == 0) == on_segment


def test_claim_bands_pinned():
    r = ci_ratios(50, 50)
    bands = claim_bands(r, Fraction(1, 20), 2)
    assert (bands.claim1, bands.claim2, bands.lower_x, bands.lower_y) == \
        (True, True, True, True)
    mid = ChernRatios(Fraction(3, 2), Fraction(1, 2))
    assert claim_bands(mid, Fraction(1, 100), 2).all_true
    small = ci_ratios(2, 3)  # (1/4, -3/2): the low-degree exception
    bands = claim_bands(small, Fraction(1, 20), 2)
    assert bands.claim1 and not bands.claim2 and not bands.lower_x
    assert not bands.lower_y


def test_claim_bands_parameter_errors():
    r = ChernRatios(Fraction(1), Fraction(1))
    with pytest.raises(ValueError):
        claim_bands(r, 0, 2)
    with pytest.raises(ValueError):
        claim_bands(r, Fraction(1, 10), 1)


def test_claim_parameters_pinned():
    first, second = claim_parameters(1, 2)
    assert first == (3, -1) and 2 - first[0] - 2 * first[1] == 1
    assert second == (-2, 1) and 2 - second[0] - 2 * second[1] == 2
    first, _ = claim_parameters(Fraction(1, 2), 2)
    assert first == (5, -2)
    assert f_of_ab(*first) == -12


@given(st.fractions(min_value=Fraction(1, 200), max_value=50, max_denominator=200),
       st.fractions(min_value=Fraction(101, 100), max_value=50, max_denominator=200))
def test_claim_parameters_stay_admissible(eps, alpha):
    (a1, b1), (a2, b2) = claim_parameters(eps, alpha)
    assert 2 - a1 - 2 * b1 == 1
    assert 2 - a2 - 2 * b2 == 1 + (alpha - 1) / eps > 0


def test_family_trace_fixed_s_pinned():
    trace = family_trace(FamilySpec.ci_fixed_s(2, 100, 100))
    p = trace.points[0]
    assert p.invariants == InvariantTuple(200, 19200, 1843200, 176947200, -7685600, 2)
    assert p.ratios.x == Fraction(176947200, 184454400)
    assert abs(float(p.ratios.x) - 0.95930) < 1e-5
    assert abs(float(p.ratios.y) - 1.04166) < 1e-5
    assert abs(float(p.ratios.x + p.ratios.y) - 2.00096) < 1e-5


def test_family_trace_diagonal_pinned():
    p = family_trace(FamilySpec.ci_diagonal(50, 50)).points[0]
    assert abs(float(p.ratios.x) - 1.27780) < 1e-5
    assert abs(float(p.ratios.y) - 0.70227) < 1e-5
    assert abs(float(p.ratios.x + p.ratios.y) - 1.98007) < 1e-5


def test_family_trace_flags_undefined_points():
    trace = family_trace(FamilySpec.ci_diagonal(2, 5))
    by_t = {p.t: p for p in trace.points}
    assert len(trace.points) == 4  # nothing dropped
    assert by_t[3].ratios is None and by_t[3].dist_sq is None  # K = 0 there
    assert by_t[2].ratios is not None and by_t[4].ratios is not None


def test_family_trace_explicit_list():
    members = (ci_invariants(CompleteIntersection(4, 4)),)
    spec = FamilySpec(kind="explicit_list", t_range=(0, 0), members=members)
    trace = family_trace(spec)
    assert trace.points[0].invariants == members[0]


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec.ci_diagonal(5, 4)
    with pytest.raises(ValueError):
        FamilySpec.ci_diagonal(1, 4)
    with pytest.raises(ValueError):
        FamilySpec.ci_fixed_s(1, 2, 10)
    with pytest.raises(ValueError):
        FamilySpec(kind="explicit_list", t_range=(0, 1), members=())
    with pytest.raises(ValueError):
        FamilySpec(kind="spiral", t_range=(2, 3))


def test_fixed_s_gap_decreases_and_is_small_at_100():
    trace = family_trace(FamilySpec.ci_fixed_s(2, 20, 200))
    gaps = [abs(p.ratios.x + p.ratios.y - 2) for p in trace.points]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    gap100 = gaps[100 - 20]
    assert gap100 < Fraction(1, 1000)


def test_diagonal_x_climbs_toward_four_thirds():
    trace = family_trace(FamilySpec.ci_diagonal(20, 200))
    xs = [p.ratios.x for p in trace.points]
    assert all(a < b for a, b in zip(xs, xs[1:]))
    assert all(x < Fraction(4, 3) for x in xs)
    gap50 = abs(trace.points[50 - 20].ratios.x + trace.points[50 - 20].ratios.y - 2)
    assert gap50 < Fraction(1, 50)


def test_claim_band_thresholds_at_eps_one_tenth():
    """Recorded all-true thresholds: t = 42 on CI(2, t), t = 10 on CI(t, t).

    The fixed-s family approaches the (1, 1) endpoint with x < 1, so its
    points enter the claim2 / lower_x bands only once 1 - x < ~eps."""
    fixed = {p.t: p for p in family_trace(FamilySpec.ci_fixed_s(2, 20, 200)).points}
    assert not claim_bands(fixed[41].ratios, EPS10, 2).all_true
    assert all(claim_bands(fixed[t].ratios, EPS10, 2).all_true
               for t in range(42, 201))
    diag = {p.t: p for p in family_trace(FamilySpec.ci_diagonal(9, 200)).points}
    assert not claim_bands(diag[9].ratios, EPS10, 2).all_true
    assert all(claim_bands(diag[t].ratios, EPS10, 2).all_true
               for t in range(10, 201))


def test_enumeration_empty_when_bound_collapses():
    cloud = enumerate_feasible(6, 2, positivity=True)
    assert cloud.entries == () and cloud.metadata.count == 0


def test_enumeration_small_degree_cloud():
    cloud = enumerate_feasible(14, 4, positivity=True)
    assert cloud.metadata.count == len(cloud.entries) > 0
    # canonical order and post-hoc re-verification
    keys = [(e.invariants.h2k, e.invariants.hk2, e.invariants.chi)
            for e in cloud.entries]
    assert keys == sorted(keys)
    for e in cloud.entries:
        assert e.invariants.validate()
        report = check_all(e.invariants, 4, cloud.metadata.policy,
                           ENUMERATION_IDS)
        assert report.all_satisfied
    parallel = enumerate_feasible(14, 4, positivity=True, workers=3)
    assert parallel.entries == cloud.entries


def test_enumeration_guards():
    with pytest.raises(ValueError, match="cap"):
        enumerate_feasible(61, 8, positivity=True)
    with pytest.raises(InapplicableError):
        enumerate_feasible(16, 4, SlackPolicy.asymptotic(), True)
    with pytest.raises(ValueError):
        enumerate_feasible(0, 2)
    with pytest.raises(ValueError):
        enumerate_feasible(16, 4, positivity=True, workers=0)


def test_enumeration_without_positivity_widens_the_range():
    with_pos = enumerate_feasible(12, 3, positivity=True)
    without = enumerate_feasible(12, 3, positivity=False)
    assert without.metadata.count > with_pos.metadata.count > 0
    assert any(e.invariants.h2k < 0 for e in without.entries)
    assert all(e.invariants.k3 >= 1 for e in with_pos.entries)
