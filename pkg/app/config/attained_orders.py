"""
Imported facts about torsion orders known to occur.

These are constructions documented in the literature rather than
computations performed here; reports mark them as imported.
"""

from typing import Dict, List

# torsion orders of elliptic curves over Q with integral j
ELLIPTIC_INTEGRAL_J_ORDERS: List[int] = [1, 2, 3, 4, 6]

# orders added by Weil restrictions of elliptic curves over quadratic fields
WEIL_RESTRICTION_ORDERS: List[int] = [5, 7, 8, 10]

# torsion of Jacobians of modular curves with everywhere potentially good reduction
MODULAR_JACOBIAN_ORDERS: Dict[str, int] = {"J_1(13)": 19, "J_1(16)": 20}

# orders ruled out by a global argument rather than by local collation
GLOBALLY_EXCLUDED: Dict[int, Dict[int, str]] = {
    1: {5: "excluded by global argument (modularity, X_0(25))"},
}


def product_orders() -> List[int]:
    """Orders of products of two elliptic curves with integral j."""
    return sorted(
        {a * b for a in ELLIPTIC_INTEGRAL_J_ORDERS for b in ELLIPTIC_INTEGRAL_J_ORDERS}
    )


def attained_surface_orders() -> Dict[int, str]:
    """Map each attained abelian-surface torsion order to its provenance."""
    attained: Dict[int, str] = {}
    for order in product_orders():
        attained.setdefault(order, "product of elliptic curves")
    for order in WEIL_RESTRICTION_ORDERS:
        attained.setdefault(order, "Weil restriction from a quadratic field")
    for name, order in MODULAR_JACOBIAN_ORDERS.items():
        attained.setdefault(order, name)
    return dict(sorted(attained.items()))
