"""
Configuration module for the torsion bounds library.

Contains constant tables (CM j-invariants, imported attained orders,
golden fixture names), search budgets and environment-driven settings.
"""

from .attained_orders import (
    ELLIPTIC_INTEGRAL_J_ORDERS,
    GLOBALLY_EXCLUDED,
    MODULAR_JACOBIAN_ORDERS,
    WEIL_RESTRICTION_ORDERS,
    attained_surface_orders,
    product_orders,
)
from .cm_invariants import CM_J_INVARIANTS, CM_J_TABLE, RAMIFIED_J
from .goldens import EXAMPLE_CURVES, GOLDEN_FIXTURES, SILVERBERG_TOLERANCE
from .search_limits import SEARCH_LIMITS
from .settings import DEFAULT_GOLDENS_DIR, Settings, get_settings

__all__ = [
    "CM_J_INVARIANTS",
    "CM_J_TABLE",
    "RAMIFIED_J",
    "DEFAULT_GOLDENS_DIR",
    "ELLIPTIC_INTEGRAL_J_ORDERS",
    "EXAMPLE_CURVES",
    "GLOBALLY_EXCLUDED",
    "GOLDEN_FIXTURES",
    "MODULAR_JACOBIAN_ORDERS",
    "SEARCH_LIMITS",
    "SILVERBERG_TOLERANCE",
    "Settings",
    "WEIL_RESTRICTION_ORDERS",
    "attained_surface_orders",
    "get_settings",
    "product_orders",
]
