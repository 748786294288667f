"""
Elliptic curve modules.

This package contains Weierstrass models with their group law, the
modular curves X_1(N) in Kubert coordinates with fiber degree sequences,
and torsion subgroups over number fields.
"""

from .modular import (
    FiberComponent,
    FiberScheme,
    cm_j_invariants,
    cm_orbit_degrees,
    compress_row,
    degree_sequence,
    degree_table,
    division_polynomial,
    division_values,
    expand_row,
    expected_degree_sum,
    fiber_components,
    fiber_scheme,
    full_two_torsion_degree_sequence,
    hesse_fiber_degrees,
    hesse_j,
    j_kubert,
    primitive_order_relation,
)
from .torsion import (
    FiniteFieldCurve,
    count_points,
    nf_point_add,
    reduce_curve,
    residue_fields,
    torsion_of_spec,
    torsion_subgroup,
)
from .weierstrass import INFINITY, WeierstrassCurve, rational_curve

__all__ = [
    "FiberComponent",
    "FiberScheme",
    "cm_j_invariants",
    "cm_orbit_degrees",
    "compress_row",
    "degree_sequence",
    "degree_table",
    "division_polynomial",
    "division_values",
    "expand_row",
    "expected_degree_sum",
    "fiber_components",
    "fiber_scheme",
    "full_two_torsion_degree_sequence",
    "hesse_fiber_degrees",
    "hesse_j",
    "j_kubert",
    "primitive_order_relation",
    "FiniteFieldCurve",
    "count_points",
    "nf_point_add",
    "reduce_curve",
    "residue_fields",
    "torsion_of_spec",
    "torsion_subgroup",
    "INFINITY",
    "WeierstrassCurve",
    "rational_curve",
]
