from decimal import Decimal

import pytest
from mpmath import iv
from pydantic import ValidationError
from sympy import primerange

from app.core.local_bounds import (
    additive_prime_support,
    brute_force_gl_order,
    brute_force_m_p,
    cm_exponent_bound,
    cm_prime_bound,
    corollary_prime_bound,
    gl_order,
    global_collation_bound,
    local_bound,
    m_p,
    p_power_floor,
    silverberg_bound_log10,
    weil_cap,
)
from app.models import LocalContext
from app.utils.error_handler import DomainError


@pytest.mark.parametrize(
    "q,d,expected",
    [(2, 1, 5), (3, 1, 7), (4, 1, 9), (5, 1, 10), (8, 1, 14), (13, 1, 21), (2, 2, 33), (3, 2, 55)],
)
def test_weil_cap(q, d, expected):
    assert weil_cap(q, d) == expected


def test_weil_cap_rejects_non_prime_power():
    with pytest.raises(DomainError):
        weil_cap(6, 1)
    with pytest.raises(DomainError):
        weil_cap(2, 0)


def test_p_power_floor():
    assert p_power_floor(2, 1, 2) == 4
    assert p_power_floor(7, 1, 7) == 7
    assert p_power_floor(2, 2, 2) == 32


@pytest.mark.parametrize("D,N", [(2, 3), (2, 4), (2, 5), (1, 12)])
def test_gl_order_matches_enumeration(D, N):
    assert gl_order(D, N) == brute_force_gl_order(D, N)


def test_gl_order_values():
    assert gl_order(2, 3) == 48
    assert gl_order(2, 4) == 96


def test_m_p_values():
    assert m_p(2, 2) == 4
    assert m_p(3, 2) == 1
    assert m_p(7, 2) == 0


@pytest.mark.parametrize("p", list(primerange(2, 32)))
@pytest.mark.parametrize("D", range(1, 7))
def test_m_p_matches_brute_force(p, D):
    assert m_p(p, D) == brute_force_m_p(p, D)


@pytest.mark.parametrize("d", range(1, 11))
def test_m_p_vanishes_above_2d_plus_1(d):
    for p in primerange(2 * d + 2, 101):
        assert m_p(p, 2 * d) == 0, p


@pytest.mark.parametrize("D", [1, 2, 3])
@pytest.mark.parametrize("M,N", [(3, 4), (4, 5), (3, 5), (5, 7), (8, 9), (4, 15)])
def test_gl_order_is_multiplicative(D, M, N):
    assert gl_order(D, M * N) == gl_order(D, M) * gl_order(D, N)


@pytest.mark.parametrize(
    "p,expected",
    [(2, 10240), (7, 91), (13, 273)],
)
def test_local_bound_totals(p, expected):
    report = local_bound(LocalContext(p=p, f=1, e=1, d=1))
    assert report.total_bound == expected
    assert report.additive_prime_support == [2, 3]


def test_local_bound_factors_multiply():
    report = local_bound(LocalContext(p=3, f=2, e=4, d=2))
    product = report.prime_to_p_bound
    for factor in report.p_part_factors:
        product *= factor
    assert product == report.total_bound
    assert report.formal_group_factor == 3 ** (2 * 2 * 2)


def test_local_context_requires_prime():
    with pytest.raises(ValidationError):
        LocalContext(p=4)


def test_additive_prime_support():
    assert additive_prime_support(2) == [2, 3, 5]


def test_global_collation_bounds():
    assert global_collation_bound(2, 1) == 1815
    assert global_collation_bound(1, 1) == 35
    assert corollary_prime_bound(1, 5) == 43


def test_silverberg_bound():
    mantissa, exponent = silverberg_bound_log10(2, 1)
    assert exponent == 1275357349
    assert abs(mantissa - Decimal("4.0262")) <= Decimal("0.0002")


def test_cm_bounds():
    assert cm_exponent_bound(1, 6) == 18
    assert cm_exponent_bound(1, 2, True) == 2
    assert cm_prime_bound(5, 6) == 31


def test_cm_bounds_reject_unknown_roots_of_unity():
    with pytest.raises(DomainError):
        cm_exponent_bound(1, 3)


def test_silverberg_bound_restores_interval_precision():
    before = iv.prec
    first = silverberg_bound_log10(1, 1)
    assert iv.prec == before
    assert silverberg_bound_log10(1, 1) == first
