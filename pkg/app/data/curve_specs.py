"""
Curve specifications: Kubert curves over number fields given as text.

A specification names the field by the minimal polynomial of its
generator and b, c as polynomials in that generator, e.g.

    name=cubic14a modulus=d^3-d^2-2*d+1 generator=d b=2*d-1 c=d^2-d
"""

from typing import List, Tuple

from sympy import Poly as SympyPoly
from sympy import Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from ..exact.number_field import NFElement, NumberField
from ..models import CurveSpec
from ..utils.error_handler import DomainError
from .records import parse_records, read_records

_TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication)


def _rational_coefficients(text: str, generator: str) -> List:
    """Coefficients of a polynomial in ``generator``, constant term first."""
    symbol = Symbol(generator)
    try:
        expr = parse_expr(text, local_dict={generator: symbol}, transformations=_TRANSFORMATIONS)
        poly = SympyPoly(expr, symbol, domain="QQ")
    except Exception as exc:
        raise DomainError(f"not a polynomial in {generator}: {text!r}") from exc
    return list(reversed(poly.all_coeffs()))


def curve_from_spec(spec: CurveSpec) -> Tuple[NumberField, NFElement, NFElement]:
    """(K, b, c) for a specification; the modulus must be monic integral irreducible."""
    modulus = _rational_coefficients(spec.modulus, spec.generator)
    if any(not c.is_integer for c in modulus):
        raise DomainError("the modulus must have integer coefficients", {"modulus": spec.modulus})
    K = NumberField.from_coefficients([int(c) for c in modulus], spec.generator)
    b = K.element([str(c) for c in _rational_coefficients(spec.b, spec.generator)])
    c = K.element([str(c) for c in _rational_coefficients(spec.c, spec.generator)])
    return K, b, c


def _specs(kind: str, records) -> List[CurveSpec]:
    if kind != "curves":
        raise DomainError("not a curve specification file", {"kind": kind})
    try:
        return [CurveSpec(**record) for record in records]
    except (TypeError, ValueError) as exc:
        raise DomainError(f"invalid curve specification: {exc}") from exc


def specs_from_text(text: str) -> List[CurveSpec]:
    return _specs(*parse_records(text))


def read_specs(path: str) -> List[CurveSpec]:
    return _specs(*read_records(path))


def spec_record(spec: CurveSpec) -> dict:
    return {
        "name": spec.name,
        "modulus": spec.modulus,
        "generator": spec.generator,
        "b": spec.b,
        "c": spec.c,
    }
