"""
Long Weierstrass models and the chord-tangent group law.

y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over any exact field whose
elements support + - * / and equality with integers: sympy rationals,
NFElement, FFElement. Coefficients may also be polynomials in a formal
ring, in which case only the covariants are meaningful.

Points are (x, y) tuples; the point at infinity is ``None``.
"""

from typing import Any, Optional, Tuple

from ..exact.scalars import to_scalar
from ..utils.error_handler import DomainError, SingularCurveError

Point = Optional[Tuple[Any, Any]]
INFINITY: Point = None


class WeierstrassCurve:
    __slots__ = ("a1", "a2", "a3", "a4", "a6")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1, self.a2, self.a3, self.a4, self.a6 = a1, a2, a3, a4, a6

    @classmethod
    def kubert(cls, b, c) -> "WeierstrassCurve":
        """y^2 + (1 - c)xy - by = x^3 - bx^2, with (0, 0) marked."""
        zero = b * 0
        return cls(1 - c, -b, -b, zero, zero)

    @property
    def coefficients(self) -> Tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.coefficients
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self):
        b2 = self.b2
        return -b2 * b2 * b2 + 36 * b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def is_singular(self) -> bool:
        return self.discriminant == 0

    def j_invariant(self):
        disc = self.discriminant
        if disc == 0:
            raise SingularCurveError("singular model has no j-invariant")
        c4 = self.c4
        return c4 * c4 * c4 / disc

    def map(self, func) -> "WeierstrassCurve":
        """Apply ``func`` to every coefficient (base change, reduction)."""
        return WeierstrassCurve(*(func(a) for a in self.coefficients))

    # Group law
    def contains(self, P: Point) -> bool:
        if P is INFINITY:
            return True
        x, y = P
        a1, a2, a3, a4, a6 = self.coefficients
        return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6) == 0

    def _check(self, P: Point) -> None:
        if not self.contains(P):
            raise DomainError("point is not on the curve", {"point": repr(P)})

    def negate(self, P: Point) -> Point:
        if P is INFINITY:
            return INFINITY
        x, y = P
        return (x, -y - self.a1 * x - self.a3)

    def add(self, P: Point, Q: Point, check: bool = True) -> Point:
        if check:
            self._check(P)
            self._check(Q)
        if P is INFINITY:
            return Q
        if Q is INFINITY:
            return P
        a1, a2, a3, a4, a6 = self.coefficients
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 + y2 + a1 * x2 + a3 == 0:
                return INFINITY
            slope = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
            offset = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / (2 * y1 + a1 * x1 + a3)
        else:
            slope = (y2 - y1) / (x2 - x1)
            offset = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = slope * slope + a1 * slope - a2 - x1 - x2
        y3 = -(slope + a1) * x3 - offset - a3
        return (x3, y3)

    def multiply(self, P: Point, n: int) -> Point:
        self._check(P)
        if n < 0:
            return self.multiply(self.negate(P), -n)
        result, addend = INFINITY, P
        while n:
            if n & 1:
                result = self.add(result, addend, check=False)
            addend = self.add(addend, addend, check=False)
            n >>= 1
        return result

    def point_order(self, P: Point, bound: int) -> Optional[int]:
        """Exact order of P if it is at most ``bound``, else None."""
        self._check(P)
        Q = P
        for n in range(1, bound + 1):
            if Q is INFINITY:
                return n
            Q = self.add(Q, P, check=False)
        return None

    def __repr__(self) -> str:
        return f"WeierstrassCurve{self.coefficients!r}"


def rational_curve(*coefficients) -> WeierstrassCurve:
    """Curve over Q from ints, Fractions or ``"a/b"`` strings."""
    if len(coefficients) != 5:
        raise DomainError("a Weierstrass model has five coefficients a1, a2, a3, a4, a6")
    return WeierstrassCurve(*(to_scalar(a) for a in coefficients))
