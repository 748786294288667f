import random
from fractions import Fraction

import pytest
from sympy import Symbol
from sympy.polys.domains import QQ

from app.exact import (
    GaloisField,
    NFPoly,
    NumberField,
    certify_irreducible,
    factor_rational_poly,
    format_scalar,
    is_square,
    isqrt,
    nf_gcd,
    nf_roots,
    poly_ring,
    prime_power,
    resultant,
    squarefree_part,
    to_scalar,
    univariate,
)
from app.exact.scalars import euler_phi, is_squarefree, valuation
from app.utils.error_handler import DomainError


# Scalars
def test_to_scalar_accepts_common_spellings():
    assert to_scalar("3/4") == QQ(3, 4)
    assert to_scalar(Fraction(-2, 6)) == QQ(-1, 3)
    assert to_scalar(7) == QQ(7)


@pytest.mark.parametrize("bad", [True, "1.5", "x", "1/0"])
def test_to_scalar_rejects(bad):
    with pytest.raises(DomainError):
        to_scalar(bad)


def test_format_scalar_reduces():
    assert format_scalar("6/4") == "3/2"
    assert format_scalar(-1728) == "-1728"


def test_integer_helpers():
    assert isqrt(99) == 9
    assert is_square(49) and not is_square(50)
    assert prime_power(9) == (3, 2)
    assert prime_power(13) == (13, 1)
    assert valuation(96, 2) == 5
    assert euler_phi(18) == 6
    with pytest.raises(DomainError):
        prime_power(12)


@pytest.mark.parametrize(
    "n,p,expected", [(3 * 2**100, 2, 100), (5**40, 5, 40), (7, 3, 0), (-81, 3, 4)]
)
def test_valuation(n, p, expected):
    assert valuation(n, p) == expected


def test_valuation_of_zero_rejected():
    with pytest.raises(DomainError):
        valuation(0, 2)


@pytest.mark.parametrize("n,expected", [(1, 1), (97, 96), (2**10, 512), (360, 96)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize(
    "n,expected", [(1, True), (30, True), (12, False), (49, False), (0, False)]
)
def test_is_squarefree(n, expected):
    assert is_squarefree(n) is expected


def test_isqrt_brackets_random_integers():
    rng = random.Random(256)
    for _ in range(10**4):
        n = rng.getrandbits(rng.randint(1, 256))
        r = isqrt(n)
        assert r * r <= n < (r + 1) ** 2


# Polynomials over Q
def test_factorization_is_normalized_and_sorted():
    f = univariate("x", [-2, 1, 1])  # x^2 + x - 2 = (x - 1)(x + 2)
    result = factor_rational_poly(3 * f)
    assert result.unit == 3
    assert result.degrees == [1, 1]
    assert all(g.LC == 1 for g, _ in result.factors)
    assert result.expand() == 3 * f


def test_squarefree_part_drops_multiplicity():
    x = univariate("x", [0, 1])
    f = (x - 1) ** 3 * (x + 1)
    assert squarefree_part(f) == (x - 1) * (x + 1)


def _random_poly(rng, max_degree, bound=6):
    degree = rng.randint(1, max_degree)
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    return univariate("x", coeffs + [rng.choice([-3, -2, -1, 1, 2, 3])])


def test_factorization_multiplies_back_into_irreducibles():
    rng = random.Random(6)
    for _ in range(60):
        f = _random_poly(rng, 6)
        if rng.random() < 0.5 and f.degree() <= 3:
            f = f * _random_poly(rng, 6 - f.degree())
        result = factor_rational_poly(f)
        assert result.expand() == f
        assert all(certify_irreducible(g) for g, _ in result.factors)


def test_squarefree_part_ignores_repeated_factors():
    rng = random.Random(2)
    for _ in range(30):
        f, g = _random_poly(rng, 3), _random_poly(rng, 3)
        assert squarefree_part(f**2 * g) == squarefree_part(f * g)


def test_certify_irreducible():
    assert certify_irreducible(univariate("x", [1, -2, -1, 1]))  # x^3 - x^2 - 2x + 1
    assert not certify_irreducible(univariate("x", [-1, 0, 1]))


def test_resultant_eliminates_variable():
    R = poly_ring(["x", "y"])
    x, y = R.gens
    res = resultant(x**2 - 2, x - y, "x")
    assert res.as_expr() == Symbol("y") ** 2 - 2


def test_resultant_swaps_with_sign():
    R = poly_ring(["x", "y"])
    x, y = R.gens
    rng = random.Random(11)

    def random_bivariate():
        m = rng.randint(1, 3)
        f = rng.choice([-2, -1, 1, 2]) * x**m
        for i in range(m):
            for j in range(3):
                f += rng.randint(-4, 4) * x**i * y**j
        return f, m

    for _ in range(25):
        (f, m), (g, n) = random_bivariate(), random_bivariate()
        assert resultant(f, g, "x") == (-1) ** (m * n) * resultant(g, f, "x")


def test_resultant_rejects_missing_variable():
    R = poly_ring(["x", "y"])
    x, y = R.gens
    with pytest.raises(DomainError):
        resultant(y + 1, y - 1, "x")


# Number fields
@pytest.fixture
def sqrt2():
    return NumberField.from_coefficients([-2, 0, 1])


def test_number_field_arithmetic(sqrt2):
    t = sqrt2.gen
    assert t * t == 2
    assert (1 + t) * (t - 1) == 1
    assert (1 + t).inverse() == t - 1
    assert t.norm() == -2


def test_number_field_ring_axioms():
    K = NumberField.from_coefficients([1, -2, -1, 1])
    rng = random.Random(3)

    def random_element():
        return K.element([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)])

    for _ in range(40):
        a, b, c = random_element(), random_element(), random_element()
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c


def test_reducible_modulus_rejected():
    with pytest.raises(DomainError):
        NumberField.from_coefficients([-1, 0, 1])


def test_nf_roots_with_multiplicity(sqrt2):
    t = sqrt2.gen
    g = NFPoly(sqrt2, [-2, 0, 1]) * NFPoly.linear(sqrt2, t)
    roots = nf_roots(g)
    assert len(roots) == 3
    assert roots.count(t) == 2
    assert -t in roots


def test_nf_gcd_is_monic(sqrt2):
    t = sqrt2.gen
    f = NFPoly(sqrt2, [-2, 0, 1])
    g = NFPoly.linear(sqrt2, t) * 3
    h = nf_gcd(f, g)
    assert h.degree == 1
    assert h(t).is_zero()


def test_minimal_polynomial_of_element(sqrt2):
    t = sqrt2.gen
    m = (t + 1).minimal_polynomial()
    assert m.degree() == 2
    assert m == univariate("x", [-1, -2, 1])


# Finite fields
def test_galois_field_of_order_four():
    F = GaloisField.of_order(4)
    assert (F.p, F.k, F.q) == (2, 2, 4)
    units = [x for x in F.elements() if x]
    assert len(units) == 3
    assert all(x**3 == 1 for x in units)


def test_galois_field_rejects_reducible_modulus():
    with pytest.raises(DomainError):
        GaloisField(2, [1, 0, 1])


def test_finite_field_inverse_and_characters():
    F = GaloisField(7)
    assert F(3) * F(3).inverse() == 1
    squares = {x for x in F.elements() if x and x.is_square()}
    assert squares == {F(1), F(2), F(4)}
    assert F(3).quadratic_character() == -1
    assert F(0).quadratic_character() == 0


def test_trace_over_prime_subfield():
    F = GaloisField.of_order(4)
    traces = sorted(x.trace() for x in F.elements())
    assert traces == [0, 0, 1, 1]
