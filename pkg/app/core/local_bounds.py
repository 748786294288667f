"""
Local Torsion Bounds

Closed-form bounds on the torsion of abelian varieties over local and
global fields, evaluated in exact integer arithmetic.

Key Features:
- Weil caps floor((1+sqrt(q))^(2d)) through exact A + B*sqrt(q) expansions
- Orders of GL_D(Z/NZ) and the minimal p-adic valuation m_p(D)
- Full local bound with its formal-group, component and special-fibre factors
- Global collation bound and its largest-prime companion
- Certified interval evaluation of the Silverberg comparison bound
- Exponent bounds for CM abelian varieties
"""

from decimal import Decimal
from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import List, Optional, Tuple

import numpy as np
from mpmath import floor as mp_floor
from mpmath import iv, mpf, workdps
from mpmath.ctx_mp import PrecisionManager
from sympy import isprime, prevprime, primerange

from ..config.search_limits import SEARCH_LIMITS
from ..exact.scalars import euler_phi, factorization, isqrt, prime_power, valuation
from ..models import BoundReport, LocalContext
from ..utils.error_handler import DomainError, UndecidedError, UnsupportedRangeError

ALLOWED_ROOTS_OF_UNITY = (2, 4, 6)


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or value < 1:
            raise DomainError(f"{name} must be a positive integer", {name: value})


def _sqrt_expansion(q: int, d: int) -> Tuple[int, int]:
    """(A, B) with (1 + sqrt(q))^(2d) = A + B*sqrt(q)."""
    A = B = 0
    for k in range(2 * d + 1):
        if k % 2 == 0:
            A += comb(2 * d, k) * q ** (k // 2)
        else:
            B += comb(2 * d, k) * q ** (k // 2)
    return A, B


def _floor_power(q: int, d: int) -> int:
    A, B = _sqrt_expansion(q, d)
    return A + isqrt(B * B * q)


def weil_cap(q: int, d: int) -> int:
    """
    floor((1 + sqrt(q))^(2d)) for a prime power q.

    Args:
        q: Residue field cardinality p^f
        d: Dimension of the abelian variety

    Returns:
        The cap on the prime-to-p torsion (and on #A(F_q))
    """
    prime_power(q)
    _require_positive(d=d)
    return _floor_power(q, d)


def p_power_floor(q: int, d: int, p: int) -> int:
    """Largest power of p not exceeding (1 + sqrt(q))^(2d)."""
    if not isprime(p):
        raise DomainError(f"{p} is not prime", {"p": p})
    cap = weil_cap(q, d)
    power = 1
    while power * p <= cap:
        power *= p
    return power


def gl_order(D: int, N: int) -> int:
    """#GL_D(Z/NZ), multiplicative over the prime powers of N."""
    _require_positive(D=D)
    if N < 2:
        raise DomainError("N must be at least 2", {"N": N})
    order = 1
    for ell, k in factorization(N).items():
        factor = ell ** ((k - 1) * D * D)
        for i in range(D):
            factor *= ell**D - ell**i
        order *= factor
    return order


def brute_force_gl_order(D: int, N: int, max_matrices: int = 10**6) -> int:
    """Count invertible D x D matrices over Z/NZ by enumeration."""
    _require_positive(D=D)
    if N < 2:
        raise DomainError("N must be at least 2", {"N": N})
    if N ** (D * D) > max_matrices:
        raise UnsupportedRangeError(
            "matrix enumeration too large", {"D": D, "N": N, "limit": max_matrices}
        )
    mats = np.array(list(product(range(N), repeat=D * D)), dtype=np.int64).reshape(-1, D, D)
    det = np.zeros(len(mats), dtype=np.int64)
    for perm in permutations(range(D)):
        inversions = sum(1 for i in range(D) for j in range(i + 1, D) if perm[i] > perm[j])
        term = np.ones(len(mats), dtype=np.int64)
        for row, col in enumerate(perm):
            term = term * mats[:, row, col]
        det += -term if inversions % 2 else term
    return int(np.count_nonzero(np.gcd(np.mod(det, N), N) == 1))


def _m_p_moduli(p: int, D: int) -> List[int]:
    """Prime-power representatives searched for m_p(D)."""
    ceiling = max(SEARCH_LIMITS["m_p_prime_floor"], 4 * D * D + 1)
    moduli = [ell for ell in primerange(3, ceiling + 1) if ell != p]
    if p != 2:
        moduli.insert(0, 4)
    return moduli


def m_p(p: int, D: int) -> int:
    """
    min over N >= 3 coprime to p of ord_p(#GL_D(Z/NZ)).

    ord_p is additive over the CRT factorization of N and constant along
    powers of a fixed prime ell != p, so prime moduli (and 4) suffice.
    """
    if not isprime(p):
        raise DomainError(f"{p} is not prime", {"p": p})
    _require_positive(D=D)
    return min(valuation(gl_order(D, N), p) for N in _m_p_moduli(p, D))


def brute_force_m_p(p: int, D: int, limit: Optional[int] = None) -> int:
    """m_p(D) by scanning every modulus 3 <= N <= limit coprime to p."""
    if not isprime(p):
        raise DomainError(f"{p} is not prime", {"p": p})
    limit = limit or SEARCH_LIMITS["m_p_brute_force_limit"]
    return min(
        valuation(gl_order(D, N), p) for N in range(3, limit + 1) if N % p != 0
    )


def additive_prime_support(d: int) -> List[int]:
    """Primes that can divide torsion at a purely additive place: ell <= 2d+1."""
    _require_positive(d=d)
    return list(primerange(2, 2 * d + 2))


def local_bound(ctx: LocalContext) -> BoundReport:
    """
    Full local bound for an abelian variety of dimension d over a p-adic
    field with residue degree f and absolute ramification index e.

    Args:
        ctx: Local field context (p, f, e, d)

    Returns:
        BoundReport whose total is the product of the prime-to-p cap and the
        three p-part factors
    """
    p, f, e, d = ctx.p, ctx.f, ctx.e, ctx.d
    q = ctx.q
    prime_to_p = weil_cap(q, d)
    formal = p ** (f * d * (e // (p - 1)))
    component = p ** (2 * d * m_p(p, 2 * d))
    special = p_power_floor(q, d, p)
    return BoundReport(
        context=ctx,
        prime_to_p_bound=prime_to_p,
        formal_group_factor=formal,
        component_factor=component,
        special_fiber_factor=special,
        total_bound=prime_to_p * formal * component * special,
        additive_prime_support=additive_prime_support(d),
    )


def global_collation_bound(d: int, n: int) -> int:
    """floor((1+2^(n/2))^(2d)) * floor((1+3^(n/2))^(2d)) for a degree-n field."""
    _require_positive(d=d, n=n)
    return weil_cap(2**n, d) * weil_cap(3**n, d)


def corollary_prime_bound(d: int, n: int) -> int:
    """Largest prime not exceeding floor((1+2^(n/2))^(2d))."""
    _require_positive(d=d, n=n)
    cap = weil_cap(2**n, d)
    if cap < 2:
        raise DomainError("no prime below the cap", {"d": d, "n": n})
    return int(prevprime(cap + 1))


def _log_one_plus_power(base_log, exponent):
    """Interval ln(1 + base^exponent) for a huge positive exponent."""
    head = exponent * base_log
    return head + iv.ln(1 + iv.exp(-head))


def _iv_rational(value: Fraction):
    return iv.mpf(value.numerator) / value.denominator


def _interval_workdps(digits: int) -> PrecisionManager:
    """Scoped decimal precision for the interval context (``iv`` has no workdps)."""
    return PrecisionManager(iv, None, lambda _: digits)


def silverberg_bound_log10(d: int, n: int) -> Tuple[Decimal, int]:
    """
    Mantissa (5 significant figures) and decimal exponent of
    [(1 + 2^(g3*n/2)) * (1 + 3^(g4*n/2))]^(2d), g3 = #GL_2d(Z/3), g4 = #GL_2d(Z/4).

    The logarithm is evaluated in interval arithmetic; the precision is
    doubled until both endpoints round to the same mantissa.
    """
    _require_positive(d=d, n=n)
    a = Fraction(gl_order(2 * d, 3) * n, 2)
    b = Fraction(gl_order(2 * d, 4) * n, 2)
    digits = SEARCH_LIMITS["silverberg_digits"]
    for _ in range(4):
        with _interval_workdps(digits), workdps(digits):
            total = 2 * d * (
                _log_one_plus_power(iv.ln2, _iv_rational(a))
                + _log_one_plus_power(iv.ln(3), _iv_rational(b))
            )
            log10 = total / iv.ln10
            low, high = int(mp_floor(mpf(log10.a))), int(mp_floor(mpf(log10.b)))
            if low == high:
                mantissa = iv.exp((log10 - low) * iv.ln10)
                lo_digits = int(mp_floor(mpf(mantissa.a) * 10**4 + mpf(1) / 2))
                hi_digits = int(mp_floor(mpf(mantissa.b) * 10**4 + mpf(1) / 2))
                if lo_digits == hi_digits:
                    return Decimal(lo_digits).scaleb(-4), low
        digits *= 2
    raise UndecidedError("mantissa rounding not certified", details={"d": d, "n": n})


def _roots_of_unity_budget(n: int, mu_O: int, contains_cm_field: bool) -> int:
    _require_positive(n=n)
    if mu_O not in ALLOWED_ROOTS_OF_UNITY:
        raise DomainError("#mu(O) must be 2, 4 or 6", {"mu_O": mu_O})
    budget = Fraction(mu_O * n, 2 if contains_cm_field else 1)
    return int(budget)


def cm_exponent_bound(n: int, mu_O: int, contains_cm_field: bool = False) -> int:
    """Largest e with phi(e) <= delta * #mu(O) * n, delta = 1/2 with a CM subfield."""
    budget = _roots_of_unity_budget(n, mu_O, contains_cm_field)
    # phi(e) >= sqrt(e/2)
    ceiling = 2 * budget * budget + 2
    return max(e for e in range(1, ceiling + 1) if euler_phi(e) <= budget)


def cm_prime_bound(n: int, mu_O: int, contains_cm_field: bool = False) -> int:
    """Largest prime e with e - 1 <= delta * #mu(O) * n."""
    budget = _roots_of_unity_budget(n, mu_O, contains_cm_field)
    return int(prevprime(budget + 2))
