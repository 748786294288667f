from itertools import product

import pytest

from app.curves.torsion import (
    FiniteFieldCurve,
    count_points,
    nf_point_add,
    reduce_curve,
    reduce_element,
    residue_fields,
    torsion_of_spec,
    torsion_subgroup,
    two_torsion_points,
)
from app.curves.weierstrass import INFINITY, WeierstrassCurve
from app.data.curve_specs import curve_from_spec
from app.exact import NumberField
from app.utils.error_handler import DomainError, SingularCurveError, UnsupportedRangeError


@pytest.fixture
def sqrt2():
    return NumberField.from_coefficients([-2, 0, 1])


def _naive_count(E: FiniteFieldCurve) -> int:
    a1, a2, a3, a4, a6 = E.model.coefficients
    elements = list(E.field.elements())
    return 1 + sum(
        1
        for x, y in product(elements, repeat=2)
        if y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6
    )


# Finite fields
def test_count_points_prime_field():
    assert count_points(FiniteFieldCurve.over(5, 0, 0, 0, 1, 1)) == 9


def test_count_points_characteristic_two_extension():
    assert count_points(FiniteFieldCurve.over(4, 0, 0, 1, 0, 0)) == 9


@pytest.mark.parametrize(
    "q,coefficients",
    [(7, (1, 2, 3, 4, 5)), (9, (0, 1, 0, 2, 1)), (8, (1, 0, 1, 1, 1)), (4, (1, 1, 0, 0, 1))],
)
def test_count_points_matches_enumeration(q, coefficients):
    E = FiniteFieldCurve.over(q, *coefficients)
    assert count_points(E) == _naive_count(E)


def test_finite_field_curve_guards():
    with pytest.raises(SingularCurveError):
        FiniteFieldCurve.over(5, 0, 0, 0, 0, 0)
    with pytest.raises(UnsupportedRangeError):
        FiniteFieldCurve.over(10007, 0, 0, 0, 1, 1)


# Residue fields and reduction
def test_residue_fields_split_inert_ramified(sqrt2):
    assert [r.q for r in residue_fields(sqrt2, 7)] == [7, 7]
    assert [r.q for r in residue_fields(sqrt2, 5)] == [25]
    assert residue_fields(sqrt2, 2) == []


def test_reduce_element_respects_arithmetic(sqrt2):
    t = sqrt2.gen
    for residue in residue_fields(sqrt2, 7):
        image = reduce_element(t, residue)
        assert image * image == 2
        assert reduce_element((1 + t) / 3, residue) * 3 == 1 + image


def test_reduce_element_rejects_non_integral(sqrt2):
    (residue,) = residue_fields(sqrt2, 5)
    with pytest.raises(DomainError):
        reduce_element(sqrt2.gen / 5, residue)


def test_reduce_curve_bad_reduction(sqrt2):
    # discriminant 64: bad at 2, good at 7
    E = WeierstrassCurve(sqrt2.zero, sqrt2.zero, sqrt2.zero, -sqrt2.one, sqrt2.zero)
    assert reduce_curve(E, residue_fields(sqrt2, 7)[0]) is not None
    (inert,) = residue_fields(sqrt2, 5)
    reduced = reduce_curve(E, inert)
    assert count_points(reduced) % 4 == 0


# Points over K
def test_two_torsion_points(sqrt2):
    E = WeierstrassCurve(sqrt2.zero, sqrt2.zero, sqrt2.zero, -sqrt2.one, sqrt2.zero)
    points = two_torsion_points(E, sqrt2)
    assert len(points) == 3
    for P in points:
        assert nf_point_add(E, P, P) is INFINITY
    assert nf_point_add(E, points[0], points[1]) == points[2]


def test_torsion_subgroup_input_guards(sqrt2):
    with pytest.raises(SingularCurveError):
        torsion_subgroup(sqrt2.zero, sqrt2.gen)
    other = NumberField.from_coefficients([-3, 0, 1])
    with pytest.raises(DomainError):
        torsion_subgroup(sqrt2.gen, other.gen)
    septic = NumberField.from_coefficients([-2, 0, 0, 0, 0, 0, 0, 1])
    with pytest.raises(UnsupportedRangeError):
        torsion_subgroup(septic.gen, septic.one)


# Example curves over cubic fields
def test_example_curves_parse(example_specs):
    K, b, c = curve_from_spec(example_specs["cubic14a"])
    assert K.degree == 3
    assert b == 2 * K.gen - 1
    assert c == K.gen**2 - K.gen


@pytest.mark.slow
@pytest.mark.parametrize(
    "name,structure,order",
    [("cubic14a", (14, 1), 14), ("cubic14b", (14, 1), 14), ("cubic9", (9, 1), 9)],
)
def test_example_torsion(example_specs, name, structure, order):
    group = torsion_of_spec(example_specs[name])
    assert group.structure == structure
    assert group.order == order
    assert group.generator_orders == (order,)
