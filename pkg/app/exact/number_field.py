"""
Number field arithmetic.

A NumberField is Q[t]/(m) for a monic irreducible integer polynomial m,
certified irreducible at construction. NFElement values are reduced
representatives of degree below deg m. NFPoly is a dense polynomial
with NFElement coefficients, enough for Euclidean gcds, squarefree parts
and root finding over K through Trager norms.

Key Features:
- Exact field operations, inverses through the extended Euclidean algorithm
- Norms and minimal polynomials through resultants over Q
- Roots of polynomials over K with multiplicities, verified by substitution
"""

from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..config.search_limits import SEARCH_LIMITS
from ..utils.error_handler import DomainError
from .polynomials import (
    Poly,
    certify_irreducible,
    dense_coeffs,
    factor_rational_poly,
    integral,
    poly_ring,
    rational,
    resultant,
    squarefree_part,
)
from .scalars import to_scalar


@dataclass(frozen=True, eq=False)
class NumberField:
    minimal_polynomial: Poly
    generator: str = "t"
    certified: bool = field(default=True, repr=False)

    def __post_init__(self):
        m = self.minimal_polynomial
        if m.ring.ngens != 1 or m.degree() < 1:
            raise DomainError("minimal polynomial must be univariate of degree >= 1")
        m = poly_ring([self.generator], QQ).from_dict(dict(rational(m)))
        if m.LC != 1:
            raise DomainError("minimal polynomial must be monic")
        if any(QQ.denom(c) != 1 for c in m.itercoeffs()):
            raise DomainError("minimal polynomial must have integer coefficients")
        if self.certified and not certify_irreducible(m):
            raise DomainError(f"{m.as_expr()} is reducible over Q")
        object.__setattr__(self, "minimal_polynomial", m)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], generator: str = "t") -> "NumberField":
        """Field from integer coefficients, constant term first."""
        R = poly_ring([generator], QQ)
        return cls(R.from_dict({(k,): QQ(c) for k, c in enumerate(coeffs) if c}), generator)

    @classmethod
    def from_root_of(cls, g: Poly, generator: str = "t") -> Tuple["NumberField", "NFElement"]:
        """Field generated by a root theta of an irreducible g over Q.

        The field is presented by the monic integral minimal polynomial of
        s = L*theta, where L is the leading coefficient of the primitive
        integer form of g. Returns (K, theta).
        """
        h = integral(g)
        n, lead = h.degree(), h.LC
        R = poly_ring([generator], QQ)
        terms = {}
        for (k,), coeff in h.iterterms():
            value = QQ.convert(coeff) * QQ.convert(lead) ** (n - 1 - k)
            if value:
                terms[(k,)] = value
        K = cls(R.from_dict(terms), generator, certified=False)
        return K, K.gen / lead

    @property
    def degree(self) -> int:
        return self.minimal_polynomial.degree()

    @property
    def ring(self):
        return self.minimal_polynomial.ring

    @property
    def gen(self) -> "NFElement":
        return self.element(self.ring.gens[0])

    @property
    def zero(self) -> "NFElement":
        return NFElement(self, self.ring.zero)

    @property
    def one(self) -> "NFElement":
        return NFElement(self, self.ring.one)

    def element(self, value: Any) -> "NFElement":
        """Coerce a rational, a polynomial in the generator or a coefficient list."""
        if isinstance(value, NFElement):
            if value.field != self:
                raise DomainError("element belongs to a different number field")
            return value
        if isinstance(value, Poly):
            if value.ring.ngens != 1:
                raise DomainError("number field elements are univariate in the generator")
            rep = self.ring.from_dict(dict(rational(value)))
        elif isinstance(value, (list, tuple)):
            rep = self.ring.from_dict(
                {(k,): to_scalar(c) for k, c in enumerate(value) if to_scalar(c)}
            )
        else:
            rep = self.ring.ground_new(to_scalar(value))
        return NFElement(self, rep % self.minimal_polynomial)

    def key(self) -> Tuple:
        return (self.generator, tuple(dense_coeffs(self.minimal_polynomial)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumberField) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"NumberField({self.minimal_polynomial.as_expr()})"


class NFElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: Poly):
        self.field = field
        self.rep = rep

    def _coerce(self, other: Any) -> Optional["NFElement"]:
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise DomainError("arithmetic across different number fields")
            return other
        try:
            return self.field.element(other)
        except DomainError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NFElement(self.field, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NFElement(self.field, self.rep - other.rep)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NFElement(self.field, (self.rep * other.rep) % self.field.minimal_polynomial)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "NFElement":
        if not self.rep:
            raise DomainError("division by zero in a number field")
        s, _, h = self.rep.gcdex(self.field.minimal_polynomial)
        return NFElement(self.field, s.quo_ground(h.LC) % self.field.minimal_polynomial)

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self) -> bool:
        return bool(self.rep)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NFElement):
            return self.field == other.field and self.rep == other.rep
        try:
            return self.rep == self.field.element(other).rep
        except DomainError:
            return False

    def __hash__(self) -> int:
        return hash((self.field.key(), tuple(self.coefficients())))

    def coefficients(self) -> List:
        """Rational coordinates in the power basis, constant term first."""
        n = self.field.degree
        return [self.rep.get((k,), QQ.zero) for k in range(n)]

    def is_rational(self) -> bool:
        return self.rep.degree() <= 0

    def to_rational(self):
        if not self.is_rational():
            raise DomainError("element is not rational")
        return self.rep.const()

    def norm(self):
        if not self.rep:
            return QQ(0)
        return resultant(self.field.minimal_polynomial, self.rep, self.field.generator)

    def characteristic_polynomial(self, name: str = "x") -> Poly:
        R = poly_ring([self.field.generator, name], QQ)
        t, x = R.gens
        m = self.field.minimal_polynomial.set_ring(R)
        return rational(resultant(m, x - self.rep.set_ring(R), self.field.generator))

    def minimal_polynomial(self, name: str = "x") -> Poly:
        return squarefree_part(self.characteristic_polynomial(name))

    def sort_key(self) -> Tuple:
        return tuple(self.coefficients())

    def __repr__(self) -> str:
        return f"NFElement({self.rep.as_expr()})"


class NFPoly:
    """Dense univariate polynomial over a number field, constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Iterable[Any]):
        self.field = field
        items = [field.element(c) for c in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        self.coeffs = tuple(items)

    @classmethod
    def from_rational_poly(cls, field: NumberField, f: Poly) -> "NFPoly":
        f = rational(f)
        return cls(field, [f.get((k,), QQ.zero) for k in range(f.degree() + 1)] if f else [])

    @classmethod
    def linear(cls, field: NumberField, root: Any) -> "NFPoly":
        """x - root."""
        return cls(field, [-field.element(root), field.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> NFElement:
        return self.coeffs[-1]

    def _wrap(self, coeffs) -> "NFPoly":
        return NFPoly(self.field, coeffs)

    def __add__(self, other: "NFPoly") -> "NFPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero
        return self._wrap(
            (self.coeffs[k] if k < len(self.coeffs) else zero)
            + (other.coeffs[k] if k < len(other.coeffs) else zero)
            for k in range(n)
        )

    def __neg__(self) -> "NFPoly":
        return self._wrap(-c for c in self.coeffs)

    def __sub__(self, other: "NFPoly") -> "NFPoly":
        return self + (-other)

    def __mul__(self, other: Any) -> "NFPoly":
        if not isinstance(other, NFPoly):
            scalar = self.field.element(other)
            return self._wrap(c * scalar for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return self._wrap([])
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._wrap(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NFPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def divmod(self, other: "NFPoly") -> Tuple["NFPoly", "NFPoly"]:
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [self.field.zero] * max(0, len(remainder) - other.degree)
        inv_lc = other.lc.inverse()
        while len(remainder) - 1 >= other.degree and remainder:
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] * inv_lc
            quotient[shift] = factor
            for k, c in enumerate(other.coeffs):
                remainder[shift + k] = remainder[shift + k] - factor * c
            remainder.pop()
            while remainder and remainder[-1].is_zero():
                remainder.pop()
        return self._wrap(quotient), self._wrap(remainder)

    def __mod__(self, other: "NFPoly") -> "NFPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "NFPoly") -> "NFPoly":
        return self.divmod(other)[0]

    def monic(self) -> "NFPoly":
        if self.is_zero():
            return self
        return self * self.lc.inverse()

    def derivative(self) -> "NFPoly":
        return self._wrap(c * k for k, c in enumerate(self.coeffs) if k)

    def __call__(self, value: Any) -> NFElement:
        value = self.field.element(value)
        result = self.field.zero
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def shift(self, a: Any) -> "NFPoly":
        """f(x + a)."""
        linear = self._wrap([self.field.element(a), self.field.one])
        result = self._wrap([])
        for c in reversed(self.coeffs):
            result = result * linear + self._wrap([c])
        return result

    def __repr__(self) -> str:
        return f"NFPoly({list(self.coeffs)!r})"


def nf_gcd(f: NFPoly, g: NFPoly) -> NFPoly:
    """Monic gcd over K by the Euclidean algorithm."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def nf_squarefree_part(f: NFPoly) -> NFPoly:
    if f.is_zero():
        raise DomainError("squarefree_part of the zero polynomial")
    if f.degree == 0:
        return f._wrap([f.field.one])
    return (f // nf_gcd(f, f.derivative())).monic()


def _norm_of_shift(h: NFPoly, s: int, name: str = "x_") -> Poly:
    """Norm over Q of h(x - s*theta) as a polynomial in x."""
    K = h.field
    R = poly_ring([K.generator, name], QQ)
    t, x = R.gens
    bivariate = R.zero
    shifted = x - s * t
    power = R.one
    for c in h.coeffs:
        bivariate += c.rep.set_ring(R) * power
        power *= shifted
    m = K.minimal_polynomial.set_ring(R)
    return rational(resultant(m, bivariate, K.generator))


def _simple_roots(h: NFPoly) -> List[NFElement]:
    K = h.field
    if h.degree <= 0:
        return []
    if h.degree == 1:
        return [-h.coeffs[0] / h.coeffs[1]]
    for step in range(SEARCH_LIMITS["norm_shift_retries"]):
        s = (step + 1) // 2 * (1 if step % 2 else -1)
        norm = _norm_of_shift(h, s)
        if norm.degree() <= 0 or norm.gcd(norm.diff(0)).degree() > 0:
            continue
        shifted = h.shift(-s * K.gen)
        roots = []
        for q, _ in factor_rational_poly(norm).factors:
            if q.degree() != K.degree:
                continue
            g = nf_gcd(shifted, NFPoly.from_rational_poly(K, q))
            if g.degree == 1:
                roots.append(-g.coeffs[0] - s * K.gen)
        return roots
    raise DomainError("no squarefree norm found within the shift budget")


def nf_roots(g: NFPoly) -> List[NFElement]:
    """Roots of g in K, each repeated by its multiplicity, sorted by coordinates."""
    if g.is_zero():
        raise DomainError("nf_roots of the zero polynomial")
    roots = []
    for root in _simple_roots(nf_squarefree_part(g)):
        if not g(root).is_zero():
            raise DomainError("root verification failed")
        remaining, multiplicity = g, 0
        linear = NFPoly.linear(g.field, root)
        while True:
            quotient, remainder = remaining.divmod(linear)
            if not remainder.is_zero():
                break
            remaining, multiplicity = quotient, multiplicity + 1
        roots.extend([root] * multiplicity)
    return sorted(roots, key=NFElement.sort_key)
