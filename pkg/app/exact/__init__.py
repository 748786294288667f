"""
Exact arithmetic layer.

Rationals, polynomials over Q, number fields and finite fields. Nothing in
this package uses floating point.
"""

from .finite_field import FFElement, GaloisField
from .number_field import NFElement, NFPoly, NumberField, nf_gcd, nf_roots, nf_squarefree_part
from .polynomials import (
    Factorization,
    certify_irreducible,
    elimination_sequence,
    factor_rational_poly,
    gcd_poly,
    poly_ring,
    resultant,
    squarefree_part,
    univariate,
)
from .scalars import format_scalar, is_square, isqrt, prime_power, to_scalar

__all__ = [
    "FFElement",
    "GaloisField",
    "NFElement",
    "NFPoly",
    "NumberField",
    "nf_gcd",
    "nf_roots",
    "nf_squarefree_part",
    "Factorization",
    "certify_irreducible",
    "elimination_sequence",
    "factor_rational_poly",
    "gcd_poly",
    "poly_ring",
    "resultant",
    "squarefree_part",
    "univariate",
    "format_scalar",
    "is_square",
    "isqrt",
    "prime_power",
    "to_scalar",
]
