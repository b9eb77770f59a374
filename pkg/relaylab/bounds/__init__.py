from .core import (
    AsymmetricChannelError,
    CrossCheckError,
    asymptotic_gap_report,
    bound_report,
    bounds_from_informations,
    capacity_terms,
    cutset_bound,
    gap,
    network_gap_preconstant,
    new_bound,
    new_bound_constraints,
    solve_a_star,
)

__all__ = [
    "AsymmetricChannelError",
    "CrossCheckError",
    "asymptotic_gap_report",
    "bound_report",
    "bounds_from_informations",
    "capacity_terms",
    "cutset_bound",
    "gap",
    "network_gap_preconstant",
    "new_bound",
    "new_bound_constraints",
    "solve_a_star",
]
