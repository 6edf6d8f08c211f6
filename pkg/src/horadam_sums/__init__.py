"""Exact evaluation of weighted power sums of Horadam-family sequences.

Three independent routes to every sum — a recursive Ledin-form construction,
explicit Eulerian-number closed forms, and a brute-force loop — all over
exact rational arithmetic, so route agreement is checked with equality, not
tolerances.
"""

from .closed_forms import (
    ClosedFormReport,
    ROUTE_NAMES,
    SumSpec,
    ap_sum_closed,
    applicable_routes,
    evaluate_route,
    horadam_ledin_explicit,
    ledin_constants_explicit,
    omega_closed,
    p_polys_explicit,
    q_power_sum_closed,
    restricted_ledin_explicit,
    s_closed,
    t_closed,
    uv_closed,
    weighted_ap_closed,
)
from .errors import DegenerateDenominator, GuardViolation
from .ledin import (
    LedinForm,
    ck_constants_recursive,
    ck_shifted_recursive,
    evaluate_ledin_form,
    horadam_ledin_recursive,
    horadam_p_polys_recursive,
    p_polys_recursive,
)
from .polynomials import Polynomial
from .rationals import format_rational, parse_rational
from .sequences import (
    FIBONACCI,
    JACOBSTHAL,
    LUCAS,
    PELL,
    HoradamParams,
    SequenceCache,
    eulerian,
    eulerian_row,
    fibonacci,
    horadam_term,
    lucas,
    lucas_u,
    lucas_u_term,
    lucas_v,
    lucas_v_term,
    named_sequence_params,
    u_params,
    v_params,
)
from .verify import (
    DEFAULT_GRID_PARAMS,
    GENERIC_RATIONAL,
    REPEATED_ROOT,
    Mismatch,
    VerificationReport,
    brute_sum,
    eulerian_recurrence_oracle,
    verify_grid,
)

__all__ = [
    "ClosedFormReport",
    "DEFAULT_GRID_PARAMS",
    "DegenerateDenominator",
    "FIBONACCI",
    "GENERIC_RATIONAL",
    "GuardViolation",
    "HoradamParams",
    "JACOBSTHAL",
    "LUCAS",
    "LedinForm",
    "Mismatch",
    "PELL",
    "Polynomial",
    "REPEATED_ROOT",
    "ROUTE_NAMES",
    "SequenceCache",
    "SumSpec",
    "VerificationReport",
    "ap_sum_closed",
    "applicable_routes",
    "brute_sum",
    "ck_constants_recursive",
    "ck_shifted_recursive",
    "eulerian",
    "eulerian_recurrence_oracle",
    "eulerian_row",
    "evaluate_ledin_form",
    "evaluate_route",
    "fibonacci",
    "format_rational",
    "horadam_ledin_explicit",
    "horadam_ledin_recursive",
    "horadam_p_polys_recursive",
    "horadam_term",
    "ledin_constants_explicit",
    "lucas",
    "lucas_u",
    "lucas_u_term",
    "lucas_v",
    "lucas_v_term",
    "named_sequence_params",
    "omega_closed",
    "p_polys_explicit",
    "p_polys_recursive",
    "parse_rational",
    "q_power_sum_closed",
    "restricted_ledin_explicit",
    "s_closed",
    "t_closed",
    "u_params",
    "uv_closed",
    "v_params",
    "verify_grid",
    "weighted_ap_closed",
]
