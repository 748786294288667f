import pytest

from app.config.attained_orders import attained_surface_orders, product_orders
from app.core.collation import (
    admissible_orders,
    dimension_one_input,
    dimension_one_report,
    prime_to_p_part,
    surface_input,
    surface_report,
    two_adic_decomposition,
    undecided_report,
    weil_interval_input,
)
from app.core.local_bounds import global_collation_bound
from app.data.records import parse_ranges
from app.enums import CensusMode
from app.models import CollationInput
from app.utils.error_handler import DomainError

SURFACE_CANDIDATES = parse_ranges("1-16,18-20,22,24,25,28,30,36,48,60,72")


def test_prime_to_p_part():
    assert prime_to_p_part(72, 2) == 9
    assert prime_to_p_part(72, 3) == 8
    assert prime_to_p_part(35, 2) == 35


def test_admissible_orders_records_smallest_witness():
    data = CollationInput(per_prime={2: [3, 9], 3: [4, 8]})
    result = admissible_orders(data, 24)
    assert result.admissible_orders == [1, 2, 3, 4, 6, 8, 9, 12, 18, 24]
    assert result.witnesses[12] == {2: 3, 3: 4}


def test_admissible_orders_rejects_bad_cap():
    with pytest.raises(DomainError):
        admissible_orders(CollationInput(per_prime={2: [1]}), 0)


def test_dimension_one_candidates():
    report = dimension_one_report()
    assert report.admissible_orders == [1, 2, 3, 4, 5, 6]
    assert report.cap == 35
    assert list(report.annotations) == [5]


def test_weil_interval_parameterization():
    candidates = admissible_orders(
        weil_interval_input([2, 3], 2), global_collation_bound(2, 1)
    )
    max_a, odd = two_adic_decomposition(candidates)
    assert max_a == 5
    assert odd == list(range(1, 34, 2))


def test_surface_candidates():
    report = surface_report()
    assert report.admissible_orders == SURFACE_CANDIDATES
    assert report.cap == 1815


def test_surface_candidates_over_two_and_three():
    report = surface_report(primes=[2, 3])
    assert set(SURFACE_CANDIDATES) <= set(report.admissible_orders)


def test_undecided_orders():
    undecided = undecided_report(surface_report(), attained_surface_orders())
    assert undecided == [11, 13, 14, 15, 22, 25, 28, 30, 48, 60, 72]


def test_undecided_report_rejects_impossible_attained_orders():
    with pytest.raises(DomainError):
        undecided_report(surface_report(), [17])


def test_product_orders():
    assert product_orders() == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 36]


PRIME_PREFIXES = [[2], [2, 3], [2, 3, 5], [2, 3, 5, 7]]


@pytest.mark.parametrize(
    "build,d", [(dimension_one_input, 1), (surface_input, 2)], ids=["elliptic", "surface"]
)
def test_adding_primes_only_removes_orders(build, d):
    cap = global_collation_bound(d, 1)
    lists = [
        set(admissible_orders(build(primes), cap).admissible_orders) for primes in PRIME_PREFIXES
    ]
    for smaller, larger in zip(lists[1:], lists):
        assert smaller <= larger


@pytest.mark.parametrize(
    "build,d", [(dimension_one_input, 1), (surface_input, 2)], ids=["elliptic", "surface"]
)
def test_admissible_orders_closed_under_divisors(build, d):
    result = admissible_orders(build([2, 3, 5, 7]), global_collation_bound(d, 1))
    admissible = set(result.admissible_orders)
    for N in admissible:
        assert all(M in admissible for M in range(1, N + 1) if N % M == 0), N


def test_surface_candidates_agree_across_census_modes():
    published = surface_report(mode=CensusMode.PUBLISHED)
    assert published.admissible_orders == surface_report().admissible_orders
    assert published.witnesses == surface_report().witnesses
