"""Hook-length products, critical pairs of compositions and nonsymmetric
Jack polynomials, backed by the exact-arithmetic C++ core."""

from ._core import (
    DomainError,
    CompositionParseError,
    parse_composition,
    rank_vector,
    sort_info,
    dominates,
    triangle_greater,
    leg_length,
    hook_factors,
    factor_multiplicity,
    is_critical_pair,
    construct_beta,
    chain,
    closure,
    detect_extra_hooks,
    enumerate_partners,
    zeta_coefficients,
    knop_sahi,
    xi_specialization_match,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "CompositionParseError",
    "parse_composition",
    "rank_vector",
    "sort_info",
    "dominates",
    "triangle_greater",
    "leg_length",
    "hook_factors",
    "factor_multiplicity",
    "is_critical_pair",
    "construct_beta",
    "chain",
    "closure",
    "detect_extra_hooks",
    "enumerate_partners",
    "zeta_coefficients",
    "knop_sahi",
    "xi_specialization_match",
]
