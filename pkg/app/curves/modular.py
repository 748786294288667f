"""
Modular Curves X_1(N) in Kubert Coordinates

Every pair (E, P) with P of order N >= 4 has a unique model
y^2 + (1 - c)xy - by = x^3 - bx^2 with P = (0, 0). The order-N condition
is a polynomial F_N(b, c), and the fiber of X_1(N) over a j-invariant is
the zero-dimensional scheme {F_N = 0, j(b, c) = j} with the singular and
lower-order loci removed. Its reduced structure is a product of number
fields whose degrees form the degree sequence of (N, j).

Key Features:
- Division values at (0, 0) and formal division polynomials over Z[b, c]
- Primitive order-N relations F_N for 4 <= N <= 13
- Fiber schemes and their components, certified point by point
- Degree sequences for Z/N and Z/2 x Z/2M torsion over the CM j-invariants
- Hesse family j-map for full 3-torsion
- CM orbit counts for j = 0 and j = 1728 as an independent cross-check
- Row compression in the (a,b)^k notation
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import nextprime, primefactors
from sympy.polys.domains import QQ, ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_from_int_poly,
    gf_mul,
    gf_neg,
    gf_pow_mod,
    gf_rem,
)

from ..config.cm_invariants import CM_J_INVARIANTS, RAMIFIED_J
from ..config.search_limits import SEARCH_LIMITS
from ..data.cache import memoize
from ..exact.number_field import NFElement, NFPoly, NumberField, nf_gcd, nf_roots
from ..exact.polynomials import (
    Poly,
    dense_coeffs,
    elimination_sequence,
    factor_rational_poly,
    integral,
    poly_ring,
    rational,
    squarefree_part,
)
from ..exact.scalars import denominator, format_scalar, numerator, to_scalar
from ..models import DegreeSequence
from ..utils.error_handler import DomainError, EliminationError, UnsupportedRangeError
from ..utils.error_logger import debug_log
from ..utils.parallel import parallel_map
from .weierstrass import WeierstrassCurve

KUBERT_RING = poly_ring(["b", "c"], ZZ)
DIVISION_RING = poly_ring(["b", "c", "x"], ZZ)
_CHART_RING = poly_ring(["b", "c", "u"], ZZ)
_SHIFTED_RING = poly_ring(["c", "u"], ZZ)
HESSE_RING = poly_ring(["l"], QQ)


# Kubert covariants
@memoize("kubert_covariants")
def kubert_covariants() -> Dict[str, Poly]:
    """b2, b4, b6, b8, c4, c6, the discriminant and its reduced factor over Z[b, c].

    The discriminant factors as b^3 * D2 with
    D2 = 16b^2 + b(1 - 20c - 8c^2) + c(c - 1)^3.
    """
    b, c = KUBERT_RING.gens
    E = WeierstrassCurve.kubert(b, c)
    disc = E.discriminant
    reduced = disc.exquo(b**3)
    return {
        "b2": E.b2,
        "b4": E.b4,
        "b6": E.b6,
        "b8": E.b8,
        "c4": E.c4,
        "c6": E.c6,
        "discriminant": disc,
        "reduced_discriminant": reduced,
    }


def _require_level(N: int) -> None:
    low, high = SEARCH_LIMITS["kubert_levels"]
    if not isinstance(N, int) or not low <= N <= high:
        raise UnsupportedRangeError(
            f"order-N relations are supported for {low} <= N <= {high}", {"N": N}
        )


# Division polynomials
@memoize("division_values")
def division_values(n: int) -> Tuple[Poly, ...]:
    """
    psi_0, ..., psi_n evaluated at (0, 0), as elements of Z[b, c].

    Uses psi_1 = 1, psi_2 = 2y + a1 x + a3 = -b, psi_3 = b8, psi_4 = a3(b4 b8 - b6^2)
    at the origin and the elliptic-net recurrences for the rest.
    """
    if n < 0:
        raise DomainError("n must be nonnegative", {"n": n})
    cov = kubert_covariants()
    b, _ = KUBERT_RING.gens
    psi = [KUBERT_RING.zero, KUBERT_RING.one, -b, cov["b8"]]
    psi.append(-b * (cov["b4"] * cov["b8"] - cov["b6"] ** 2))
    two = psi[2]
    for k in range(5, n + 1):
        m = k // 2
        if k % 2:
            value = psi[m + 2] * psi[m] ** 3 - psi[m - 1] * psi[m + 1] ** 3
        else:
            value = psi[m] * (
                psi[m + 2] * psi[m - 1] ** 2 - psi[m - 2] * psi[m + 1] ** 2
            )
            value = value.exquo(two)
        psi.append(value)
    return tuple(psi[: n + 1])


def two_division_cubic(curve: Optional[WeierstrassCurve] = None, x=None):
    """4x^3 + b2 x^2 + 2 b4 x + b6, formal in x over Z[b, c, x] by default."""
    if curve is None:
        b, c, x = DIVISION_RING.gens
        curve = WeierstrassCurve.kubert(b, c)
    elif x is None:
        raise DomainError("evaluate the cubic of an explicit curve at an explicit x")
    return 4 * x**3 + curve.b2 * x**2 + 2 * curve.b4 * x + curve.b6


@memoize("formal_division")
def _formal_division(n: int) -> Tuple[Poly, ...]:
    """g_0..g_n in Z[b, c, x] with psi_k = g_k for odd k and psi_k = g_k * psi_2 for even k."""
    b, c, x = DIVISION_RING.gens
    E = WeierstrassCurve.kubert(b, c)
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    cubic = two_division_cubic()
    square = cubic**2
    g = [
        DIVISION_RING.zero,
        DIVISION_RING.one,
        DIVISION_RING.one,
        3 * x**4 + b2 * x**3 + 3 * b4 * x**2 + 3 * b6 * x + b8,
        2 * x**6
        + b2 * x**5
        + 5 * b4 * x**4
        + 10 * b6 * x**3
        + 10 * b8 * x**2
        + (b2 * b8 - b4 * b6) * x
        + (b4 * b8 - b6**2),
    ]
    for k in range(5, n + 1):
        m = k // 2
        if k % 2 == 0:
            g.append(g[m] * (g[m + 2] * g[m - 1] ** 2 - g[m - 2] * g[m + 1] ** 2))
        elif m % 2 == 0:
            g.append(square * g[m + 2] * g[m] ** 3 - g[m - 1] * g[m + 1] ** 3)
        else:
            g.append(g[m + 2] * g[m] ** 3 - square * g[m - 1] * g[m + 1] ** 3)
    return tuple(g[: n + 1])


def division_polynomial(N: int) -> Poly:
    """
    The N-division polynomial of the Kubert model as a polynomial in x.

    Args:
        N: Positive integer

    Returns:
        Element of Z[b, c, x]: g_N for odd N and g_N times the 2-division
        cubic for even N, so N = 1 gives 1 and N = 2 the cubic itself.
        Its roots are the x-coordinates of the nonzero N-torsion points.
    """
    if not isinstance(N, int) or N < 1:
        raise DomainError("N must be a positive integer", {"N": N})
    g = _formal_division(max(N, 4))[N]
    return g if N % 2 else g * two_division_cubic()


# Order-N relations
def _strip(f: Poly, h: Poly) -> Poly:
    """Remove every factor of h from f."""
    if h.is_ground:
        return f
    while True:
        common = f.gcd(h)
        if common.is_ground:
            return f
        f = f.exquo(common)


def _graded_lead(f: Poly):
    top = max(f.monoms(), key=lambda monom: (sum(monom), monom))
    return dict(f.terms())[top]


@memoize("primitive_order_relation")
def primitive_order_relation(N: int) -> Poly:
    """
    F_N(b, c): the locus where (0, 0) has exact order N.

    psi_N(0, 0) with the factors of b, the reduced discriminant and every
    F_d for proper divisors 4 <= d | N removed, then the squarefree
    primitive part with positive graded leading coefficient.
    """
    _require_level(N)
    f = division_values(N)[N]
    cov = kubert_covariants()
    b, _ = KUBERT_RING.gens
    f = _strip(f, b)
    f = _strip(f, cov["reduced_discriminant"])
    for d in range(4, N):
        if N % d == 0:
            f = _strip(f, primitive_order_relation(d))
    f = f.sqf_part()
    _, f = f.primitive()
    return -f if _graded_lead(f) < 0 else f


# j-invariant
def j_kubert(b, c):
    """
    j(b, c) = c4^3 / Delta.

    Scalars (ints, rationals, number field elements) give the value;
    Kubert-ring polynomials give the pair (c4^3, Delta).
    """
    if isinstance(b, Poly) or isinstance(c, Poly):
        cov = kubert_covariants()
        return cov["c4"] ** 3, cov["discriminant"]
    if not isinstance(b, NFElement) and not isinstance(c, NFElement):
        b, c = to_scalar(b), to_scalar(c)
    return WeierstrassCurve.kubert(b, c).j_invariant()


def _displayed_a() -> Poly:
    b, c = KUBERT_RING.gens
    return (1 - c) ** 2 - 4 * b


def displayed_j_numerator() -> Poly:
    """(A^2 + 24b(1 - c))^3 with A = (1 - c)^2 - 4b, the closed-form numerator of j(b, c)."""
    b, c = KUBERT_RING.gens
    A = _displayed_a()
    return (A**2 + 24 * b * (1 - c)) ** 3


def displayed_j_denominator() -> Poly:
    """b^3 (A^2 + 8(1 - c)^3 - 27b - 9(1 - c)A), the closed-form denominator."""
    b, c = KUBERT_RING.gens
    A = _displayed_a()
    return b**3 * (A**2 + 8 * (1 - c) ** 3 - 27 * b - 9 * (1 - c) * A)


def displayed_j_agrees() -> bool:
    """Whether the closed-form j(b, c) equals c4^3 / Delta as a rational function."""
    num, den = j_kubert(*KUBERT_RING.gens)
    return num * displayed_j_denominator() == den * displayed_j_numerator()


def fiber_relation(j) -> Poly:
    """Generator of {j(b, c) = j}: c4 for j = 0, c6 for j = 1728, else den*c4^3 - num*Delta."""
    j = to_scalar(j)
    cov = kubert_covariants()
    if j == 0:
        return cov["c4"]
    if j == 1728:
        return cov["c6"]
    return denominator(j) * cov["c4"] ** 3 - numerator(j) * cov["discriminant"]


# Fiber schemes
@dataclass(frozen=True)
class FiberScheme:
    N: int
    j: object
    relation: Poly
    fiber: Poly
    excised: Tuple[Poly, ...]

    @property
    def generators(self) -> Tuple[Poly, Poly]:
        return (self.relation, self.fiber)


def fiber_scheme(N: int, j) -> FiberScheme:
    """T_{N,j} = {F_N = 0, j(b, c) = j} minus Delta = 0 and the psi_{N/l} = 0 loci."""
    _require_level(N)
    j = to_scalar(j)
    excised = [kubert_covariants()["discriminant"]]
    psi = division_values(N)
    for ell in primefactors(N):
        if N // ell > 1:
            excised.append(psi[N // ell])
    return FiberScheme(
        N=N,
        j=j,
        relation=primitive_order_relation(N),
        fiber=fiber_relation(j),
        excised=tuple(excised),
    )


@dataclass(frozen=True)
class FiberComponent:
    """One closed point of a fiber: a Galois orbit of (b, c) pairs."""

    degree: int
    polynomial: Poly
    shift: int
    field: Optional[NumberField] = None
    b: Optional[NFElement] = None
    c: Optional[NFElement] = None


def _to_chart(f: Poly, shift: int) -> Poly:
    """f in chart coordinates with the eliminated variable first.

    Chart 0 is (b, c) itself. Chart shift > 0 substitutes b = u - shift*c
    and returns a polynomial in (c, u).
    """
    if shift == 0:
        return f
    b, c, u = _CHART_RING.gens
    lifted = f.set_ring(_CHART_RING).compose(b, u - shift * c)
    return lifted.set_ring(_SHIFTED_RING)


def _coefficients(f: Poly) -> List[Poly]:
    """Coefficients in the eliminated variable, as univariate polynomials in the kept one."""
    if not f:
        return []
    return [f.coeff_wrt(0, k).drop(0) for k in range(f.degree(0) + 1)]


def _constant_leading(f: Poly) -> bool:
    return f.degree(0) >= 0 and f.coeff_wrt(0, f.degree(0)).is_ground


def _at(h: Poly, theta: NFElement) -> NFElement:
    """h(theta) for a univariate h over Z or Q."""
    value = theta.field.zero
    for coeff in dense_coeffs(rational(h)):
        value = value * theta + coeff
    return value


def _int_coeffs(h: Poly) -> List[int]:
    return [int(c) for c in dense_coeffs(h)]


class _RootCertificate:
    """
    Nonvanishing tests at (x0, theta) where g(theta) = 0 and
    x0 = -s10(theta) / s11(theta).

    For H = sum H_k x^k of degree D, H(x0, theta) s11^D is
    sum H_k(theta) (-s10(theta))^k s11(theta)^(D - k). A nonzero image
    in F_p[t]/(g mod p), for p not dividing the leading coefficient of g,
    certifies a nonzero value; otherwise the sum is reduced modulo g over Q.
    """

    def __init__(self, g: Poly, s10: Poly, s11: Poly):
        self.g = g
        self.gz = integral(g)
        self.s10, self.s11 = s10, s11

    def _primes(self) -> Iterator[int]:
        lead = int(self.gz.LC)
        p, found = SEARCH_LIMITS["certificate_prime_floor"], 0
        while found < SEARCH_LIMITS["certificate_primes"]:
            p = nextprime(p)
            if lead % p:
                found += 1
                yield p

    def _homogeneous_mod(self, coeffs: Sequence[Poly], p: int) -> list:
        modulus = gf_from_int_poly(_int_coeffs(self.gz), p)

        def reduce(h):
            return gf_rem(gf_from_int_poly(_int_coeffs(h), p), modulus, p, ZZ)

        def mulmod(u, v):
            return gf_rem(gf_mul(u, v, p, ZZ), modulus, p, ZZ)

        negated = gf_neg(reduce(self.s10), p, ZZ)
        s11 = reduce(self.s11)
        D = len(coeffs) - 1
        total = []
        for k, h in enumerate(coeffs):
            term = mulmod(reduce(h), gf_pow_mod(negated, k, modulus, p, ZZ))
            term = mulmod(term, gf_pow_mod(s11, D - k, modulus, p, ZZ))
            total = gf_add(total, term, p, ZZ)
        return total

    def _homogeneous_exact(self, coeffs: Sequence[Poly]) -> Poly:
        g = self.g
        negated = (-rational(self.s10)) % g
        s11 = rational(self.s11) % g
        D = len(coeffs) - 1
        s11_powers = [g.ring.one]
        for _ in range(D):
            s11_powers.append((s11_powers[-1] * s11) % g)
        total, power = g.ring.zero, g.ring.one
        for k, h in enumerate(coeffs):
            total += rational(h) * power * s11_powers[D - k]
            total %= g
            power = (power * negated) % g
        return total

    def nonzero(self, coeffs: Sequence[Poly]) -> bool:
        if not coeffs:
            return False
        for p in self._primes():
            if self._homogeneous_mod(coeffs, p):
                return True
        return bool(self._homogeneous_exact(coeffs))


def _chart_point(shift: int, x0: NFElement, theta: NFElement) -> Tuple[NFElement, NFElement]:
    """(b, c) from the eliminated coordinate x0 and the kept coordinate theta."""
    if shift == 0:
        return x0, theta
    return theta - shift * x0, x0


def _solve_chart(
    scheme: FiberScheme, shift: int, with_points: bool
) -> Optional[List[FiberComponent]]:
    """Components of the fiber in one chart, or None when the chart is degenerate."""
    F = _to_chart(scheme.relation, shift)
    G = _to_chart(scheme.fiber, shift)
    if not _constant_leading(G):
        return None
    eliminated = "b" if shift == 0 else "c"
    res, prs = elimination_sequence(F, G, eliminated)
    if not res:
        debug_log(f"fiber N={scheme.N} j={scheme.j}: zero resultant in chart {shift}")
        return None
    res = rational(res)
    if res.is_ground:
        return []

    linear = [h for h in prs if h.degree(0) == 1]
    s10 = s11 = None
    if linear:
        s10, s11 = (part.drop(0) for part in (linear[-1].coeff_wrt(0, 0), linear[-1].coeff_wrt(0, 1)))
    F_coeffs, G_coeffs = _coefficients(F), _coefficients(G)
    excised = [_coefficients(_to_chart(h, shift)) for h in scheme.excised]

    components = []
    for g, _ in factor_rational_poly(squarefree_part(res)).factors:
        K = theta = x0 = None
        certificate = _RootCertificate(g, s10, s11) if s11 is not None else None
        if certificate is not None and certificate.nonzero([s11]):
            if any(not certificate.nonzero(h) for h in excised):
                continue
        else:
            # the subresultant vanishes at theta: read the common root off a gcd over K
            K, theta = NumberField.from_root_of(g)
            common = nf_gcd(
                NFPoly(K, [_at(h, theta) for h in F_coeffs]),
                NFPoly(K, [_at(h, theta) for h in G_coeffs]),
            )
            if common.degree != 1:
                debug_log(f"fiber N={scheme.N} j={scheme.j}: shape failure in chart {shift}")
                return None
            x0 = -common.coeffs[0]
            if any(NFPoly(K, [_at(c, theta) for c in h])(x0).is_zero() for h in excised):
                continue
        b = c = None
        if with_points:
            if K is None:
                K, theta = NumberField.from_root_of(g)
                x0 = -_at(s10, theta) / _at(s11, theta)
            b, c = _chart_point(shift, x0, theta)
        components.append(
            FiberComponent(degree=g.degree(), polynomial=g, shift=shift, field=K, b=b, c=c)
        )
    return components


def _fiber_components(N: int, j, with_points: bool) -> List[FiberComponent]:
    scheme = fiber_scheme(N, j)
    for shift in range(SEARCH_LIMITS["elimination_retries"] + 1):
        components = _solve_chart(scheme, shift, with_points)
        if components is not None:
            return components
    raise EliminationError(
        "elimination degenerate in every chart",
        {"N": N, "j": format_scalar(j), "retries": SEARCH_LIMITS["elimination_retries"]},
    )


@memoize("fiber_components")
def _cached_components(N: int, j: str, with_points: bool) -> Tuple[FiberComponent, ...]:
    return tuple(_fiber_components(N, to_scalar(j), with_points))


def fiber_components(N: int, j, with_points: bool = False) -> List[FiberComponent]:
    """
    Closed points of the fiber of X_1(N) over j.

    Args:
        N: Level, 4 <= N <= 13
        j: Rational j-invariant
        with_points: Also build each residue field and the exact (b, c) in it

    Returns:
        Components sorted by their defining polynomial. Each carries the
        chart shift that certified it.
    """
    _require_level(N)
    return list(_cached_components(N, format_scalar(j), with_points))


def degree_sequence(N: int, j) -> DegreeSequence:
    """Degrees of the residue fields of the reduced fiber of X_1(N) over j."""
    components = fiber_components(N, j)
    return DegreeSequence(
        degrees=[component.degree for component in components],
        level=N,
        j=format_scalar(j),
        label=f"Z/{N}",
        shift=max((component.shift for component in components), default=0),
    )


def _is_square(value: NFElement) -> bool:
    return bool(nf_roots(NFPoly(value.field, [-value, 0, 1])))


def full_two_torsion_degree_sequence(M: int, j) -> DegreeSequence:
    """
    Degrees for Z/2 x Z/2M: the locus where (0, 0) has order 2M and the
    2-division cubic splits.

    The cubic always has the root x_T = x([M](0, 0)); the other two roots
    are those of the quadratic cofactor 4x^2 + (b2 + 4x_T)x + (2b4 + b2 x_T + 4x_T^2).
    A component of the X_1(2M) fiber contributes two points of its degree
    when the cofactor discriminant is a square there, one point of twice
    the degree otherwise.
    """
    low, high = SEARCH_LIMITS["two_torsion_levels"]
    if not isinstance(M, int) or not low <= M <= high:
        raise UnsupportedRangeError(
            f"Z/2 x Z/2M is supported for {low} <= M <= {high}", {"M": M}
        )
    degrees = []
    for component in fiber_components(2 * M, j, with_points=True):
        K, b, c = component.field, component.b, component.c
        E = WeierstrassCurve.kubert(b, c)
        if M == 2:
            x_t = b
        elif M == 3:
            x_t = c
        else:
            x_t = E.multiply((K.zero, K.zero), M)[0]
        b2, b4 = E.b2, E.b4
        linear = b2 + 4 * x_t
        disc = linear * linear - 16 * (2 * b4 + b2 * x_t + 4 * x_t * x_t)
        if disc.is_zero():
            raise DomainError("2-torsion points collide on a nonsingular fiber point")
        if _is_square(disc):
            degrees.extend([component.degree, component.degree])
        else:
            degrees.append(2 * component.degree)
    return DegreeSequence(
        degrees=degrees, level=2 * M, j=format_scalar(j), label=f"Z/2 x Z/{2 * M}"
    )


def expected_degree_sum(N: int, j=None) -> int:
    """
    Degree of X_1(N) -> X(1) modulo +-1: (N^2 / 2) prod_{p | N} (1 - 1/p^2),
    divided by 3 over j = 0 and by 2 over j = 1728.
    """
    total = N * N
    for p in primefactors(N):
        total = total // (p * p) * (p * p - 1)
    total //= 2
    special = _special_j(j) if j is not None else None
    if special is not None:
        total //= RAMIFIED_J[special]
    return total


def _special_j(j) -> Optional[int]:
    """0 or 1728 when j is one of the two elliptic points, else None."""
    value = to_scalar(j)
    for special in RAMIFIED_J:
        if value == special:
            return special
    return None


def _degree_task(args: Tuple[int, str]) -> DegreeSequence:
    N, j = args
    return degree_sequence(N, j)


def _two_torsion_task(args: Tuple[int, str]) -> DegreeSequence:
    M, j = args
    return full_two_torsion_degree_sequence(M, j)


def degree_table(
    N: int, js: Optional[Sequence] = None, workers: int = 1, full_two_torsion: bool = False
) -> List[DegreeSequence]:
    """
    One table row: degree sequences for N (or Z/2 x Z/2N) over the given j's.

    Args:
        N: Level, or M for the Z/2 x Z/2M row
        js: j-invariants, the 13 CM values by default
        workers: Worker processes for the parallel map
        full_two_torsion: Build the Z/2 x Z/2N row instead

    Returns:
        Sequences in the order of ``js``, independent of ``workers``
    """
    js = CM_J_INVARIANTS if js is None else js
    tasks = [(N, format_scalar(j)) for j in js]
    task = _two_torsion_task if full_two_torsion else _degree_task
    return parallel_map(task, tasks, workers)


# Row notation
def compress_row(sequences: Sequence) -> str:
    """'(2), (1,2), (2,4)^2' with equal consecutive sequences folded into ^k."""
    rendered = []
    for item in sequences:
        degrees = item.degrees if isinstance(item, DegreeSequence) else sorted(item)
        rendered.append("(" + ",".join(str(d) for d in degrees) + ")")
    parts, k = [], 0
    while k < len(rendered):
        run = 1
        while k + run < len(rendered) and rendered[k + run] == rendered[k]:
            run += 1
        parts.append(rendered[k] + (f"^{run}" if run > 1 else ""))
        k += run
    return ", ".join(parts)


_ENTRY = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)(?:\s*\^\s*(\d+))?")


def expand_row(text: str) -> List[Tuple[int, ...]]:
    """Inverse of compress_row; whitespace inside entries is ignored."""
    sequences: List[Tuple[int, ...]] = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _ENTRY.match(text, position)
        if match is None:
            raise DomainError("malformed degree-sequence row", {"row": text, "at": position})
        degrees = tuple(sorted(int(d) for d in match.group(1).split(",")))
        sequences.extend([degrees] * int(match.group(2) or 1))
        position = match.end()
        while position < len(text) and text[position] in ", ":
            position += 1
    return sequences


# Hesse family
def hesse_polynomials() -> Tuple[Poly, Poly]:
    """Numerator and denominator of the j-map of X^3 + Y^3 + Z^3 = l XYZ."""
    (lam,) = HESSE_RING.gens
    num = lam**12 - 648 * lam**9 + 139968 * lam**6 - 10077696 * lam**3
    den = -(lam**9) - 81 * lam**6 - 2187 * lam**3 - 19683
    return num, den


def hesse_j(lam):
    num, den = hesse_polynomials()
    lam = to_scalar(lam)
    value = den(lam)
    if value == 0:
        raise DomainError("the Hesse curve is singular at this parameter", {"lambda": str(lam)})
    return num(lam) / value


def hesse_fiber_degrees(j) -> DegreeSequence:
    """Degrees of the closed points of {l : J(l) = j}."""
    num, den = hesse_polynomials()
    f = num - to_scalar(j) * den
    factored = factor_rational_poly(squarefree_part(f))
    return DegreeSequence(
        degrees=[g.degree() for g, _ in factored.factors],
        level=3,
        j=format_scalar(j),
        label="Z/3 x Z/3",
    )


# CM orbits
def cm_j_invariants() -> List[int]:
    return list(CM_J_INVARIANTS)


_CM_UNITS = {0: 6, 1728: 4}


def _cm_norm(j: int, x: int, y: int) -> int:
    return x * x + y * y if j == 1728 else x * x - x * y + y * y


def _cm_multiply(j: int, N: int, u: Tuple[int, int], v: Tuple[int, int]) -> Tuple[int, int]:
    (x, y), (z, w) = u, v
    if j == 1728:
        return ((x * z - y * w) % N, (x * w + y * z) % N)
    # w^2 = -w - 1
    return ((x * z - y * w) % N, (x * w + y * z - y * w) % N)


def _cm_conjugate(j: int, N: int, u: Tuple[int, int]) -> Tuple[int, int]:
    x, y = u
    if j == 1728:
        return (x, -y % N)
    return ((x - y) % N, -y % N)


def cm_orbit_degrees(N: int, j) -> DegreeSequence:
    """
    Degree sequence over j = 0 or 1728 from the Galois action on E[N].

    The image of Galois in Aut(E[N]) modulo automorphisms of E is the
    normalizer of (O/N)^x, with O = Z[zeta_3] or Z[i]; each orbit on the
    points of exact order N, divided by #O^x, is one closed point.
    """
    j = _special_j(j)
    if j is None:
        raise DomainError("CM orbits are available for j = 0 and j = 1728 only")
    if N < 2:
        raise DomainError("N must be at least 2", {"N": N})
    units = [
        (x, y) for x in range(N) for y in range(N) if gcd(_cm_norm(j, x, y), N) == 1
    ]
    seen = set()
    degrees = []
    for point in ((x, y) for x in range(N) for y in range(N)):
        if point in seen or gcd(gcd(point[0], point[1]), N) != 1:
            continue
        orbit = {
            _cm_multiply(j, N, u, Q)
            for u in units
            for Q in (point, _cm_conjugate(j, N, point))
        }
        seen |= orbit
        degrees.append(len(orbit) // _CM_UNITS[j])
    return DegreeSequence(degrees=degrees, level=N, j=str(j), label=f"Z/{N}")
