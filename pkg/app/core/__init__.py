"""
Core computational modules.

This package contains the local torsion bounds, the Honda-Tate census of
point counts over prime fields, and the collation of local data into
global candidate orders.
"""

from .collation import (
    COLLATION_PRIMES,
    admissible_orders,
    dimension_one_report,
    prime_to_p_part,
    surface_report,
    two_adic_decomposition,
    undecided_report,
    weil_interval_input,
)
from .honda_tate import (
    census,
    census_records,
    elliptic_counts,
    frobenius_poly,
    point_count,
    read_census,
    surface_counts,
    surface_isogeny_classes,
)
from .local_bounds import (
    cm_exponent_bound,
    cm_prime_bound,
    corollary_prime_bound,
    gl_order,
    global_collation_bound,
    local_bound,
    m_p,
    p_power_floor,
    silverberg_bound_log10,
    weil_cap,
)

__all__ = [
    "COLLATION_PRIMES",
    "admissible_orders",
    "dimension_one_report",
    "prime_to_p_part",
    "surface_report",
    "two_adic_decomposition",
    "undecided_report",
    "weil_interval_input",
    "census",
    "census_records",
    "elliptic_counts",
    "frobenius_poly",
    "point_count",
    "read_census",
    "surface_counts",
    "surface_isogeny_classes",
    "cm_exponent_bound",
    "cm_prime_bound",
    "corollary_prime_bound",
    "gl_order",
    "global_collation_bound",
    "local_bound",
    "m_p",
    "p_power_floor",
    "silverberg_bound_log10",
    "weil_cap",
]
