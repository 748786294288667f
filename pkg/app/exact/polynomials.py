"""
Exact polynomials over Z and Q.

Polynomials are sympy ``PolyElement`` objects: sparse maps from exponent
vectors to exact coefficients inside a ``ring`` of one or two named
variables. This module supplies factorization over Q with a normalized,
deterministically ordered result, squarefree parts, resultants with the
standard sign convention, and irreducibility certification modulo primes.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Sequence, Tuple

from sympy import nextprime
from sympy.polys.domains import QQ, ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_irreducible_p
from sympy.polys.rings import PolyElement, ring

from ..config.search_limits import SEARCH_LIMITS
from ..utils.error_handler import DomainError

Poly = PolyElement


def poly_ring(names: Sequence[str], domain=QQ):
    """Return the (cached) polynomial ring over ``domain`` in ``names``."""
    R, *_ = ring(",".join(names), domain)
    return R


def univariate(name: str, coeffs: Iterable, domain=QQ) -> Poly:
    """Build a univariate polynomial from coefficients, constant term first."""
    R = poly_ring([name], domain)
    return R.from_dict({(k,): domain.convert(c) for k, c in enumerate(coeffs) if c})


def with_domain(f: Poly, domain) -> Poly:
    return f.set_ring(f.ring.clone(domain=domain))


def rational(f: Poly) -> Poly:
    return f if f.ring.domain == QQ else with_domain(f, QQ)


def integral(f: Poly) -> Poly:
    """Primitive integer polynomial with positive leading coefficient."""
    _, g = rational(f).clear_denoms()
    g = with_domain(g, ZZ)
    _, g = g.primitive()
    return -g if g.LC < 0 else g


def dense_coeffs(f: Poly) -> List:
    """Univariate coefficients from the leading term down."""
    return list(f.to_dense()) if f else []


def sort_key(f: Poly) -> Tuple[int, List]:
    return (f.degree(), dense_coeffs(f))


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(factor**multiplicity)`` with monic irreducible factors."""

    unit: object
    factors: Tuple[Tuple[Poly, int], ...]

    def expand(self) -> Poly:
        if not self.factors:
            raise DomainError("empty factorization has no ring")
        R = self.factors[0][0].ring
        return reduce(
            lambda acc, item: acc * item[0] ** item[1], self.factors, R.ground_new(self.unit)
        )

    @property
    def degrees(self) -> List[int]:
        return sorted(
            factor.degree() for factor, multiplicity in self.factors for _ in range(multiplicity)
        )


def _require_univariate(f: Poly, operation: str) -> Poly:
    if not isinstance(f, PolyElement) or f.ring.ngens != 1:
        raise DomainError(f"{operation} expects a univariate polynomial")
    if not f:
        raise DomainError(f"{operation} of the zero polynomial")
    return rational(f)


def factor_rational_poly(f: Poly) -> Factorization:
    """Factor a nonzero univariate polynomial over Q into monic irreducibles.

    Factors are sorted by degree, then by their coefficients from the
    leading term down.
    """
    f = _require_univariate(f, "factor_rational_poly")
    unit, raw = f.factor_list()
    factors = []
    for g, k in raw:
        g = rational(g)
        lc = g.LC
        unit = unit * lc**k
        factors.append((g.quo_ground(lc), k))
    factors.sort(key=lambda item: (sort_key(item[0]), item[1]))
    return Factorization(unit=QQ.convert(unit), factors=tuple(factors))


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f over Q."""
    f = _require_univariate(f, "squarefree_part")
    g = f.sqf_part()
    return g.monic() if g.degree() > 0 else g.ring.one


def _common_ring(f: Poly, g: Poly):
    if f.ring == g.ring:
        return f, g
    symbols = list(f.ring.symbols) + [s for s in g.ring.symbols if s not in f.ring.symbols]
    domain = f.ring.domain.unify(g.ring.domain)
    R = f.ring.clone(symbols=symbols, domain=domain)
    return f.set_ring(R), g.set_ring(R)


def _eliminating_first(f: Poly, g: Poly, eliminate: str):
    f, g = _common_ring(f, g)
    names = [str(s) for s in f.ring.symbols]
    if eliminate not in names:
        raise DomainError(f"variable {eliminate!r} absent from both inputs")
    R = f.ring
    i = names.index(eliminate)
    if f.degree(i) <= 0 and g.degree(i) <= 0:
        raise DomainError(f"variable {eliminate!r} absent from both inputs")
    order = [R.symbols[i]] + [s for k, s in enumerate(R.symbols) if k != i]
    S = R.clone(symbols=order)
    return f.set_ring(S), g.set_ring(S)


def resultant(f: Poly, g: Poly, eliminate: str):
    """Res_x(f, g) for x = ``eliminate``.

    Returns a polynomial in the remaining variables, or a scalar when no
    variable remains. The zero polynomial signals a common component.
    """
    if not f or not g:
        raise DomainError("resultant of a zero polynomial")
    f, g = _eliminating_first(f, g, eliminate)
    m, n = f.degree(0), g.degree(0)
    if m < n:
        return (-1) ** (m * n) * _ordered_resultant(g, f)
    return _ordered_resultant(f, g)


def _ordered_resultant(f: Poly, g: Poly):
    R = f.ring
    if R.ngens == 1:
        return R.dup_resultant(f, g)
    res, _ = R.dmp_prs_resultant(f, g)
    return res


def elimination_sequence(f: Poly, g: Poly, eliminate: str):
    """Subresultant sequence eliminating ``eliminate`` from a bivariate pair.

    Returns ``(res, prs)`` with ``res`` in the remaining variable and the
    polynomial remainder sequence in the reordered bivariate ring (the
    eliminated variable first). The sign of ``res`` is not normalized.
    """
    f, g = _eliminating_first(f, g, eliminate)
    if f.ring.ngens != 2:
        raise DomainError("elimination_sequence expects bivariate inputs")
    if f.degree(0) < g.degree(0):
        f, g = g, f
    return f.ring.dmp_prs_resultant(f, g)


def certify_irreducible(f: Poly) -> bool:
    """True iff f is irreducible over Q.

    Irreducibility modulo a prime not dividing the leading coefficient is
    a certificate; otherwise falls back to a full factorization.
    """
    f = _require_univariate(f, "certify_irreducible")
    if f.degree() <= 1:
        return f.degree() == 1
    g = integral(f)
    coeffs = [int(c) for c in dense_coeffs(g)]
    disc = g.discriminant()
    if disc == 0:
        return False
    p = 2
    for _ in range(SEARCH_LIMITS["irreducibility_primes"]):
        p = nextprime(p)
        if coeffs[0] % p == 0 or disc % p == 0:
            continue
        if gf_irreducible_p(gf_from_int_poly(coeffs, p), p, ZZ):
            return True
    factored = factor_rational_poly(f)
    return len(factored.factors) == 1 and factored.factors[0][1] == 1


def gcd_poly(f: Poly, g: Poly) -> Poly:
    f, g = _common_ring(rational(f), rational(g))
    h = f.gcd(g)
    return h.monic() if h and h.degree() > 0 else h.ring.one
