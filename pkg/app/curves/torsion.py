"""
Torsion of Elliptic Curves over Number Fields

Reduction modulo primes of good reduction injects the prime-to-p torsion
into E(F_q), so point counts at residue fields of two different
characteristics bound the torsion subgroup from above. Explicit points
(the marked point (0, 0) and the 2-torsion roots of the 2-division cubic)
bound it from below. A structure is reported only when the two meet.

Key Features:
- Finite-field curves and point counting by an x-sweep
- Residue fields of K from factoring the minimal polynomial modulo p
- Certified torsion structure with generators, or an undecided error
"""

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Tuple

from sympy import factorint, nextprime
from sympy.ntheory import legendre_symbol
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor_sqf, gf_from_int_poly, gf_sqf_p

from ..config.search_limits import SEARCH_LIMITS
from ..exact.finite_field import FFElement, GaloisField
from ..exact.number_field import NFElement, NFPoly, NumberField, nf_roots
from ..exact.polynomials import dense_coeffs
from ..exact.scalars import denominator, numerator
from ..models import CurveSpec, TorsionGroup
from ..utils.error_handler import DomainError, SingularCurveError, UndecidedError, UnsupportedRangeError
from ..utils.error_logger import debug_log
from .weierstrass import Point, WeierstrassCurve


@dataclass(frozen=True)
class FiniteFieldCurve:
    field: GaloisField
    model: WeierstrassCurve

    def __post_init__(self):
        if self.field.q > SEARCH_LIMITS["max_residue_field_size"]:
            raise UnsupportedRangeError(
                "residue field too large for point counting", {"q": self.field.q}
            )
        if self.model.discriminant == 0:
            raise SingularCurveError("singular model over a finite field", {"q": self.field.q})

    @classmethod
    def over(cls, q: int, *coefficients) -> "FiniteFieldCurve":
        """Curve over F_q from integer (or coefficient-list) Weierstrass coefficients."""
        F = GaloisField.of_order(q)
        if len(coefficients) != 5:
            raise DomainError("a Weierstrass model has five coefficients a1, a2, a3, a4, a6")
        return cls(F, WeierstrassCurve(*(F(a) for a in coefficients)))

    @property
    def q(self) -> int:
        return self.field.q


def _count_prime_field(p: int, coefficients: Tuple[int, ...]) -> int:
    a1, a2, a3, a4, a6 = coefficients
    count = 1
    for x in range(p):
        linear = (a1 * x + a3) % p
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        if p == 2:
            if linear == 0:
                count += 1
            else:
                # y^2 + y = rhs over F_2 has 2 roots iff rhs = 0
                count += 2 if rhs == 0 else 0
            continue
        disc = (linear * linear + 4 * rhs) % p
        count += 1 if disc == 0 else 1 + legendre_symbol(disc, p)
    return count


def count_points(E: FiniteFieldCurve) -> int:
    """
    #E(F_q), including the point at infinity.

    For each x, y^2 + (a1 x + a3) y = f(x) has 1 + chi(disc) solutions in
    odd characteristic. In characteristic 2 it has one solution when
    a1 x + a3 = 0 and otherwise two or none by the trace of f(x)/(a1 x + a3)^2.
    """
    F = E.field
    if F.k == 1:
        coefficients = tuple(a.coeffs[0] if a.coeffs else 0 for a in E.model.coefficients)
        return _count_prime_field(F.p, coefficients)
    a1, a2, a3, a4, a6 = E.model.coefficients
    count = 1
    for x in F.elements():
        linear = a1 * x + a3
        rhs = x * x * x + a2 * x * x + a4 * x + a6
        if F.p == 2:
            if linear.is_zero():
                count += 1
            else:
                count += 2 if (rhs / (linear * linear)).trace() == 0 else 0
            continue
        count += 1 + (linear * linear + 4 * rhs).quadratic_character()
    return count


# Residue fields
@dataclass(frozen=True)
class ResidueField:
    """A prime of K above p with residue field F_p[t]/(factor)."""

    p: int
    factor: Tuple[int, ...]
    field: GaloisField

    @property
    def q(self) -> int:
        return self.field.q


def residue_fields(K: NumberField, p: int) -> List[ResidueField]:
    """
    Primes of K above p, when p does not divide the discriminant of the
    minimal polynomial; otherwise an empty list (the prime is skipped).
    """
    coeffs = gf_from_int_poly([int(c) for c in dense_coeffs(K.minimal_polynomial)], p)
    if not gf_sqf_p(coeffs, p, ZZ):
        return []
    return [
        ResidueField(p=p, factor=tuple(factor), field=GaloisField(p, factor))
        for factor in sorted(gf_factor_sqf(coeffs, p, ZZ)[1], key=lambda f: (len(f), f))
    ]


def reduce_element(value, residue: ResidueField) -> FFElement:
    """Image of a rational or NFElement under the reduction map, t -> class of t."""
    F = residue.field
    coeffs = value.coefficients() if isinstance(value, NFElement) else [value]
    image = F.zero
    for coeff in reversed(coeffs):
        den = denominator(coeff)
        if den % residue.p == 0:
            raise DomainError("coefficient is not integral at this prime", {"p": residue.p})
        image = image * F.gen + F(numerator(coeff)) * pow(den, -1, residue.p)
    return image


def reduce_curve(E: WeierstrassCurve, residue: ResidueField) -> Optional[FiniteFieldCurve]:
    """Reduction of E at the prime, or None when the model is bad there."""
    try:
        model = E.map(lambda a: reduce_element(a, residue))
    except DomainError:
        return None
    if model.discriminant == 0:
        return None
    return FiniteFieldCurve(residue.field, model)


# Group law over K
def nf_point_add(E: WeierstrassCurve, P: Point, Q: Point) -> Point:
    """P + Q on E over a number field; both points are checked to lie on E."""
    return E.add(P, Q)


def two_torsion_points(E: WeierstrassCurve, K: NumberField) -> List[Point]:
    """Points of order 2 defined over K, from the roots of the 2-division cubic."""
    a1, _, a3, _, _ = E.coefficients
    cubic = NFPoly(K, [E.b6, 2 * E.b4, E.b2, 4])
    points = []
    for x in dict.fromkeys(nf_roots(cubic)):
        points.append((x, -(a1 * x + a3) / 2))
    return points


# Bounds
def _prime_to(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def _upper_bound(per_characteristic: Dict[int, int]) -> Optional[int]:
    """Largest order compatible with every prime-to-p count gcd, or None below two characteristics."""
    if len(per_characteristic) < 2:
        return None
    ells = set()
    for value in per_characteristic.values():
        ells.update(factorint(value))
    bound = 1
    for ell in ells:
        exponent = min(
            factorint(value).get(ell, 0)
            for p, value in per_characteristic.items()
            if p != ell
        )
        bound *= ell**exponent
    return bound


def _lower_bound(E: WeierstrassCurve, K: NumberField, cap: int):
    """Subgroup generated by (0, 0) (when torsion) and the K-rational 2-torsion."""
    origin = (K.zero, K.zero)
    order = E.point_order(origin, cap) if E.contains(origin) else None
    twos = two_torsion_points(E, K)
    if order is None:
        if len(twos) == 3:
            return (2, 2), (twos[0], twos[1]), (2, 2)
        if twos:
            return (2, 1), (twos[0],), (2,)
        return (1, 1), (), ()
    if len(twos) == 3:
        if order % 2 == 0:
            half = E.multiply(origin, order // 2)
            other = next(T for T in twos if T != half)
            return (order, 2), (origin, other), (order, 2)
        return (2 * order, 2), (E.add(origin, twos[0]), twos[1]), (2 * order, 2)
    if twos and order % 2:
        return (2 * order, 1), (E.add(origin, twos[0]),), (2 * order,)
    return (order, 1), (origin,), (order,)


def torsion_subgroup(b: NFElement, c: NFElement) -> TorsionGroup:
    """
    E(K)_tors for the Kubert curve E(b, c) over the field of b and c.

    Args:
        b: Kubert parameter in K
        c: Kubert parameter in K

    Returns:
        TorsionGroup with structure (n1, n2), n2 | n1, and generators

    Raises:
        UndecidedError: when the bounds do not meet within the prime budget
    """
    if not isinstance(b, NFElement) or not isinstance(c, NFElement) or b.field != c.field:
        raise DomainError("b and c must lie in one number field")
    K = b.field
    if K.degree > SEARCH_LIMITS["torsion_max_field_degree"]:
        raise UnsupportedRangeError(
            "field degree above the torsion search limit", {"degree": K.degree}
        )
    E = WeierstrassCurve.kubert(b, c)
    if E.discriminant.is_zero():
        raise SingularCurveError("Kubert curve is singular", {"b": repr(b), "c": repr(c)})

    per_characteristic: Dict[int, int] = {}
    lower = upper = None
    p = SEARCH_LIMITS["torsion_first_prime"] - 1
    while True:
        p = nextprime(p)
        if p > SEARCH_LIMITS["torsion_prime_budget"]:
            break
        counts = []
        for residue in residue_fields(K, p):
            if residue.q > SEARCH_LIMITS["max_residue_field_size"]:
                continue
            reduced = reduce_curve(E, residue)
            if reduced is not None:
                counts.append(count_points(reduced))
        if not counts:
            continue
        value = 0
        for n in counts:
            value = gcd(value, _prime_to(n, p))
        per_characteristic[p] = value
        upper = _upper_bound(per_characteristic)
        if upper is None:
            continue
        if lower is None:
            lower = _lower_bound(E, K, upper)
        structure, generators, orders = lower
        debug_log(f"torsion: p={p} lower={structure[0] * structure[1]} upper={upper}")
        if structure[0] * structure[1] == upper:
            return TorsionGroup(
                structure=structure, generators=generators, generator_orders=orders
            )
    order = lower[0][0] * lower[0][1] if lower else None
    raise UndecidedError(
        "torsion bounds did not meet within the prime budget",
        lower=order,
        upper=upper,
        details={"budget": SEARCH_LIMITS["torsion_prime_budget"]},
    )


def torsion_of_spec(spec: CurveSpec) -> TorsionGroup:
    from ..data.curve_specs import curve_from_spec

    _, b, c = curve_from_spec(spec)
    return torsion_subgroup(b, c)
