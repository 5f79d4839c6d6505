"""Exact arithmetic for abelian varieties embedded in smooth quadrics.

Chern classes of quadrics, the coefficient sequence ``F_d``, the integer
points of the self-intersection circle, degree bounds and a rule-based
elimination of each dimension.
"""

from .chow import (
    MiddleClass,
    chern_total_normal,
    chern_total_tangent_quadric,
    degree_middle,
    f_closed,
    f_series,
    intersect_middle,
    self_intersection_check,
)
from .feasibility import (
    Candidate,
    EliminationRecord,
    PolarizationType,
    RuleApplication,
    Verdict,
    apply_rules,
    circle_solutions,
    double_type,
    eliminate,
    enumerate_polarization_types,
    explain,
    h0_from_degree,
    max_degree,
    min_degree,
    quadric_space_dimension,
)
from .sequences import (
    bound_report,
    counting_crossover,
    crude_bound,
    factorial,
    fine,
    fine_comparison_report,
    fine_oracle,
)
from .series import (
    TruncSeries,
    coefficient,
    series_add,
    series_binom_power,
    series_from_coeffs,
    series_invert,
    series_mul,
)

__version__ = "0.1.0"
