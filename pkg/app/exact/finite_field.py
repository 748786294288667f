"""
Finite fields F_q, q = p^k.

Elements are coefficient tuples modulo p over a fixed irreducible modulus,
manipulated with sympy's galoistools. Residue fields of number fields are
built from the factors of a minimal polynomial modulo p so that the image
of the field generator is the class of t.
"""

from functools import lru_cache
from itertools import product
from typing import Any, Iterator, List, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_from_int_poly,
    gf_gcdex,
    gf_irreducible_p,
    gf_mul,
    gf_neg,
    gf_pow_mod,
    gf_rem,
    gf_strip,
    gf_sub,
)

from ..utils.error_handler import DomainError


class GaloisField:
    """F_p[t]/(modulus); ``modulus`` is a monic irreducible list, high degree first."""

    def __init__(self, p: int, modulus: Sequence[int] = (1, 0)):
        if not isprime(p):
            raise DomainError(f"{p} is not prime")
        modulus = [int(c) % p for c in modulus]
        modulus = gf_strip(modulus)
        if len(modulus) < 2 or modulus[0] != 1:
            raise DomainError("modulus must be monic of degree >= 1")
        if not gf_irreducible_p(modulus, p, ZZ):
            raise DomainError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = tuple(modulus)
        self.k = len(modulus) - 1
        self.q = p**self.k

    @classmethod
    def of_order(cls, q: int) -> "GaloisField":
        """F_q with the first irreducible modulus in lexicographic order."""
        from .scalars import prime_power

        p, k = prime_power(q)
        return cls(p, _first_irreducible(p, k))

    def __call__(self, value: Any) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field != self:
                raise DomainError("element of a different finite field")
            return value
        if isinstance(value, (list, tuple)):
            coeffs = [int(c) % self.p for c in value]
        else:
            coeffs = [int(value) % self.p]
        return FFElement(self, tuple(gf_rem(gf_strip(coeffs), list(self.modulus), self.p, ZZ)))

    @property
    def zero(self) -> "FFElement":
        return FFElement(self, ())

    @property
    def one(self) -> "FFElement":
        return FFElement(self, (1,))

    @property
    def gen(self) -> "FFElement":
        return self([1, 0])

    def elements(self) -> Iterator["FFElement"]:
        for coeffs in product(range(self.p), repeat=self.k):
            yield FFElement(self, tuple(gf_strip(list(coeffs))))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisField) and (self.p, self.modulus) == (
            other.p,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"GaloisField({self.p}, {list(self.modulus)})"


@lru_cache(maxsize=None)
def _first_irreducible(p: int, k: int) -> Tuple[int, ...]:
    if k == 1:
        return (1, 0)
    for tail in product(range(p), repeat=k):
        candidate = [1, *tail]
        if gf_irreducible_p(candidate, p, ZZ):
            return tuple(candidate)
    raise DomainError(f"no irreducible polynomial of degree {k} over F_{p}")


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GaloisField, coeffs: Tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other: Any) -> "FFElement":
        return other if isinstance(other, FFElement) else self.field(other)

    def _mod(self, coeffs: List[int]) -> "FFElement":
        F = self.field
        return FFElement(F, tuple(gf_rem(coeffs, list(F.modulus), F.p, ZZ)))

    def __add__(self, other):
        other = self._lift(other)
        return FFElement(self.field, tuple(gf_add(list(self.coeffs), list(other.coeffs), self.field.p, ZZ)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return FFElement(self.field, tuple(gf_sub(list(self.coeffs), list(other.coeffs), self.field.p, ZZ)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return FFElement(self.field, tuple(gf_neg(list(self.coeffs), self.field.p, ZZ)))

    def __mul__(self, other):
        other = self._lift(other)
        return self._mod(gf_mul(list(self.coeffs), list(other.coeffs), self.field.p, ZZ))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        F = self.field
        return FFElement(F, tuple(gf_pow_mod(list(self.coeffs), n, list(F.modulus), F.p, ZZ)))

    def inverse(self) -> "FFElement":
        if not self.coeffs:
            raise DomainError("division by zero in a finite field")
        F = self.field
        s, _, h = gf_gcdex(list(self.coeffs), list(F.modulus), F.p, ZZ)
        return FFElement(F, tuple(s)) * pow(int(h[0]), -1, F.p)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field(other).coeffs
        return False

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def is_square(self) -> bool:
        """Quadratic residuosity (zero counts as a square)."""
        F = self.field
        if not self.coeffs or F.p == 2:
            return True
        return (self ** ((F.q - 1) // 2)) == 1

    def quadratic_character(self) -> int:
        if not self.coeffs:
            return 0
        return 1 if self.is_square() else -1

    def trace(self) -> int:
        """Absolute trace to F_p."""
        F = self.field
        total, power = self.field.zero, self
        for _ in range(F.k):
            total = total + power
            power = power ** F.p
        return total.coeffs[0] if total.coeffs else 0

    def __repr__(self) -> str:
        return f"FFElement({list(self.coeffs)} mod {self.field.p})"


def reduce_mod(coeffs: Sequence[int], p: int) -> List[int]:
    """Integer coefficient list (high degree first) reduced modulo p."""
    return gf_from_int_poly([int(c) for c in coeffs], p)
