"""chern3fold: exact Chern-number arithmetic and ratio geography for
smooth threefolds in P^5.

The package converts intersection-number profiles (d, H^2K, HK^2, K^3,
chi, s) into Chern numbers and ratio points, checks the full inequality
catalog with exact rational margins, enumerates feasible profiles at
fixed degree, and sweeps complete-intersection families whose ratio
points accumulate on the segment x + y = 2, 1 <= x <= 2.
"""

from .invariants import (
    ChernNumbers,
    ChernRatios,
    DeltaPair,
    InconsistentTupleError,
    InvalidTupleError,
    InvariantTuple,
    RatiosUndefinedError,
    SectionalGenus,
    chern_from_invariants,
    chi_from_invariants,
    deltas,
    ratios,
    sectional_genus,
)
from .chow import (
    CompleteIntersection,
    DoublePointReport,
    GradedClass,
    NonUnitError,
    TwistedNormalData,
    chern_numbers_from_class,
    ci_invariants,
    ci_total_chern,
    ci_twisted_normal_direct,
    euler_from_chern,
    twisted_normal_segre,
    verify_double_point_formula,
)
from .constraints import (
    CHECK_ORDER,
    CastelnuovoBounds,
    ConstraintEntry,
    ConstraintReport,
    InapplicableError,
    SlackPolicy,
    boss_check,
    castelnuovo_bounds,
    check_all,
    delta_combination_check,
    f_of_ab,
    genus_check,
    ghit_check,
    hk2_leading_ratio,
    k3_leading_ratio,
    leading_term_checks,
    min_degree_for_s,
    min_degree_rhs,
    positivity_flags,
    segre_positivity_check,
    slope_check,
    slope_exception_bound,
)
from .geography import (
    DEGREE_CAP,
    ENUMERATION_IDS,
    REFERENCE_SEGMENT,
    SEGMENT_END,
    SEGMENT_START,
    ClaimBands,
    CloudEntry,
    CloudMeta,
    FamilySpec,
    FamilyTrace,
    RatioCloud,
    TracePoint,
    claim_bands,
    claim_parameters,
    enumerate_feasible,
    family_trace,
    segment_distance,
)

__version__ = "0.1.0"
