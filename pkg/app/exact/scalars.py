"""
Exact scalars.

Integers and rationals come from sympy's ZZ and QQ domains (gmpy2-backed
when available); this module adds parsing, integer square roots and the
small number-theoretic helpers every other module relies on.
"""

import math
from fractions import Fraction
from typing import Any, Dict, Tuple

from sympy import factorint, multiplicity, totient
from sympy.polys.domains import QQ, ZZ

from ..utils.error_handler import DomainError

ExactScalar = type(QQ(1, 2))


def to_scalar(value: Any):
    """Convert ints, Fractions, sympy rationals or ``"a/b"`` strings to QQ."""
    if isinstance(value, bool):
        raise DomainError(f"not a rational value: {value!r}")
    if QQ.of_type(value):
        return value
    if ZZ.of_type(value):
        return QQ.convert(value)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return QQ(int(num), int(den))
            return QQ(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational literal: {value!r}") from exc
    try:
        return QQ.from_sympy(value)
    except Exception as exc:
        raise DomainError(f"not a rational value: {value!r}") from exc


def numerator(value) -> int:
    return int(QQ.numer(to_scalar(value)))


def denominator(value) -> int:
    return int(QQ.denom(to_scalar(value)))


def format_scalar(value) -> str:
    value = to_scalar(value)
    num, den = numerator(value), denominator(value)
    return str(num) if den == 1 else f"{num}/{den}"


def isqrt(n: int) -> int:
    """Largest r with r*r <= n."""
    if n < 0:
        raise DomainError("isqrt of a negative integer", {"n": n})
    return math.isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def prime_power(q: int) -> Tuple[int, int]:
    """Return (p, f) with q = p^f, or raise DomainError."""
    if isinstance(q, int) and q >= 2:
        factors = factorint(q)
        if len(factors) == 1:
            ((p, f),) = factors.items()
            return int(p), int(f)
    raise DomainError(f"{q} is not a prime power", {"q": q})


def factorization(n: int) -> Dict[int, int]:
    return {int(p): int(k) for p, k in factorint(n).items()}


def valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise DomainError("valuation of zero")
    return int(multiplicity(p, abs(n)))


def euler_phi(n: int) -> int:
    return int(totient(n))


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(k == 1 for k in factorint(n).values())
