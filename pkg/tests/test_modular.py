import random

import pytest
from sympy.polys.domains import QQ

from app.curves.modular import (
    DIVISION_RING,
    KUBERT_RING,
    cm_orbit_degrees,
    compress_row,
    degree_sequence,
    degree_table,
    displayed_j_agrees,
    displayed_j_denominator,
    displayed_j_numerator,
    division_polynomial,
    division_values,
    expand_row,
    expected_degree_sum,
    fiber_components,
    fiber_relation,
    fiber_scheme,
    full_two_torsion_degree_sequence,
    hesse_fiber_degrees,
    hesse_j,
    j_kubert,
    kubert_covariants,
    primitive_order_relation,
)
from app.curves.weierstrass import INFINITY, WeierstrassCurve
from app.exact import GaloisField
from app.data.goldens import load_fixture
from app.models import DegreeSequence
from app.utils.error_handler import DomainError, UnsupportedRangeError

b, c = KUBERT_RING.gens


@pytest.fixture(scope="module")
def degree_rows(goldens_dir):
    return load_fixture(goldens_dir, "degree_sequences.txt")


# Covariants and division values
def test_discriminant_factorization():
    cov = kubert_covariants()
    D2 = 16 * b**2 + b * (1 - 20 * c - 8 * c**2) + c * (c - 1) ** 3
    assert cov["reduced_discriminant"] == D2
    assert cov["discriminant"] == b**3 * D2


def test_displayed_j_matches_covariants():
    assert displayed_j_agrees()


def test_displayed_j_is_c4_cubed_over_discriminant():
    A = (1 - c) ** 2 - 4 * b
    printed = b**3 * (A**2 + 8 * (1 - c) ** 3 - 27 * b - 9 * (1 - c) * A)
    cov = kubert_covariants()
    assert printed == cov["discriminant"]
    assert displayed_j_denominator() == printed
    assert displayed_j_numerator() == cov["c4"] ** 3


@pytest.mark.parametrize(
    "m,n,r", [(m, n, r) for m in range(3, 6) for n in range(2, m) for r in range(1, n)]
)
def test_division_values_satisfy_net_recurrence(m, n, r):
    psi = division_values(m + n)
    left = psi[m + n] * psi[m - n] * psi[r] ** 2
    right = psi[m + r] * psi[m - r] * psi[n] ** 2 - psi[n + r] * psi[n - r] * psi[m] ** 2
    assert left == right


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_division_values_doubling_recurrences(n):
    psi = division_values(2 * n + 1)
    assert psi[2 * n + 1] == psi[n + 2] * psi[n] ** 3 - psi[n - 1] * psi[n + 1] ** 3
    assert psi[2 * n] * psi[2] == psi[n] * (
        psi[n + 2] * psi[n - 1] ** 2 - psi[n - 2] * psi[n + 1] ** 2
    )


@pytest.mark.parametrize("p", [11, 13])
def test_division_values_detect_torsion_mod_p(p):
    F = GaloisField(p)
    psi = division_values(13)
    rng = random.Random(p)
    checked = 0
    while checked < 50:
        b0, c0 = rng.randrange(1, p), rng.randrange(p)
        E = WeierstrassCurve.kubert(F(b0), F(c0))
        if E.is_singular():
            continue
        origin = (F(0), F(0))
        for N in range(2, 14):
            vanishes = int(psi[N](b0, c0)) % p == 0
            assert vanishes == (E.multiply(origin, N) is INFINITY), (b0, c0, N)
        checked += 1


def test_division_values_at_origin():
    psi = division_values(7)
    assert psi[2] == -b
    assert psi[4] == b**5 * c
    assert psi[5] == b**8 * (b - c)
    assert psi[6] == b**12 * (b - c - c**2)
    assert psi[7] == b**16 * (c**3 + b * c - b**2)


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 8])
def test_division_polynomial_at_zero(N):
    x = DIVISION_RING.gens[2]
    at_zero = division_polynomial(N).evaluate(x, 0)
    expected = division_values(N)[N]
    if N % 2 == 0:
        expected = -b * expected
    assert at_zero.as_expr() == expected.as_expr()


def test_division_polynomial_degree():
    x = DIVISION_RING.gens[2]
    assert division_polynomial(1) == 1
    assert division_polynomial(2).degree(x) == 3
    assert division_polynomial(5).degree(x) == 12
    with pytest.raises(DomainError):
        division_polynomial(0)


def test_primitive_order_relations():
    assert primitive_order_relation(4) == c
    assert primitive_order_relation(5) == b - c
    assert primitive_order_relation(6) == c**2 + c - b
    assert primitive_order_relation(7) == c**3 + b * c - b**2


def test_order_relations_outside_supported_levels():
    with pytest.raises(UnsupportedRangeError):
        primitive_order_relation(3)
    with pytest.raises(UnsupportedRangeError):
        primitive_order_relation(14)


def test_order_relation_gives_exact_order():
    # d = 3 in b = d^3 - d^2, c = d^2 - d
    E = WeierstrassCurve.kubert(QQ(18), QQ(6))
    assert primitive_order_relation(7).evaluate([(b, 18), (c, 6)]) == 0
    assert E.point_order((QQ(0), QQ(0)), 20) == 7


# j-invariant and fibers
def test_j_kubert_scalar_and_formal():
    assert j_kubert(QQ(4), QQ(2)) == WeierstrassCurve.kubert(QQ(4), QQ(2)).j_invariant()
    num, den = j_kubert(b, c)
    assert num == kubert_covariants()["c4"] ** 3
    assert den == kubert_covariants()["discriminant"]


def test_fiber_relation_special_values():
    cov = kubert_covariants()
    assert fiber_relation(0) == cov["c4"]
    assert fiber_relation(1728) == cov["c6"]
    relation = fiber_relation("-3375")
    assert relation == cov["c4"] ** 3 + 3375 * cov["discriminant"]


def test_fiber_scheme_excises_lower_levels():
    scheme = fiber_scheme(6, 0)
    assert scheme.generators == (primitive_order_relation(6), kubert_covariants()["c4"])
    assert len(scheme.excised) == 3


@pytest.mark.parametrize(
    "N,j,expected",
    [(4, None, 6), (5, None, 12), (7, None, 24), (9, None, 36), (12, None, 48), (13, None, 84), (7, 0, 8), (7, 1728, 12)],
)
def test_expected_degree_sum(N, j, expected):
    assert expected_degree_sum(N, j) == expected


@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_degree_rows_small_levels(N, degree_rows):
    sequences = degree_table(N)
    assert [tuple(s.degrees) for s in sequences] == expand_row(degree_rows[f"Z/{N}"])
    for sequence in sequences:
        assert sequence.total == expected_degree_sum(N, sequence.j)


@pytest.mark.slow
@pytest.mark.parametrize("N", [8, 9, 10, 11, 12, 13])
def test_degree_rows_large_levels(N, degree_rows):
    sequences = degree_table(N, workers=2)
    assert compress_row(sequences).replace(" ", "") == degree_rows[f"Z/{N}"]


@pytest.mark.slow
@pytest.mark.parametrize("M", [2, 3, 4])
def test_full_two_torsion_rows(M, degree_rows):
    sequences = degree_table(M, full_two_torsion=True)
    assert compress_row(sequences).replace(" ", "") == degree_rows[f"Z/2xZ/{2 * M}"]


def test_full_two_torsion_level_guard():
    with pytest.raises(UnsupportedRangeError):
        full_two_torsion_degree_sequence(5, 0)


def test_fiber_points_satisfy_relations():
    for component in fiber_components(5, 1728, with_points=True):
        assert component.field.degree == component.degree
        assert component.b - component.c == 0
        E = WeierstrassCurve.kubert(component.b, component.c)
        assert E.j_invariant() == 1728


def test_degree_sequence_labels():
    sequence = degree_sequence(5, 0)
    assert sequence.label == "Z/5"
    assert sequence.j == "0"
    assert sequence.degrees == [4]


def test_parallel_table_matches_sequential():
    js = [0, 1728, -3375]
    assert degree_table(5, js, workers=2) == degree_table(5, js, workers=1)


# Row notation
def test_compress_row_folds_repeats():
    sequences = [DegreeSequence(degrees=d) for d in ([2], [2, 1], [2, 4], [2, 4], [6])]
    assert compress_row(sequences) == "(2), (1,2), (2,4)^2, (6)"


def test_expand_row_inverts_compress_row():
    assert expand_row("(2), (1,2), (2,4)^2") == [(2,), (1, 2), (2, 4), (2, 4)]
    with pytest.raises(DomainError):
        expand_row("(2), oops")


# Hesse family and CM orbits
def test_hesse_j():
    assert hesse_j(0) == 0
    with pytest.raises(DomainError):
        hesse_j(-3)


def test_hesse_fiber_over_zero():
    assert hesse_fiber_degrees(0).degrees == [1, 1, 2]


@pytest.mark.parametrize(
    "N,j,expected",
    [(4, 0, [2]), (4, 1728, [1, 2]), (5, 0, [4]), (5, 1728, [2, 4]), (7, 0, [2, 6]), (7, 1728, [12])],
)
def test_cm_orbit_degrees(N, j, expected):
    assert cm_orbit_degrees(N, j).degrees == expected


@pytest.mark.parametrize("N", [4, 5, 6, 7])
@pytest.mark.parametrize("j", [0, 1728])
def test_cm_orbits_agree_with_fibers(N, j):
    assert cm_orbit_degrees(N, j).degrees == degree_sequence(N, j).degrees


def test_cm_orbits_need_special_j():
    with pytest.raises(DomainError):
        cm_orbit_degrees(5, 8000)
