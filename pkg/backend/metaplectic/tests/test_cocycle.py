import random
from fractions import Fraction

import pytest

from metaplectic.cocycle import (
    GENERATOR_REDUCTION,
    MpElement,
    cocycle,
    kubota_x,
    lift,
    mp_mul,
    neighbourhood_elements,
    neighbourhood_size,
    splitting_check,
    theta_section,
)
from metaplectic.matrices import SL2
from metaplectic.suites import (
    admissible_triple,
    decomposition_sign_holds,
    depth_limit_note,
    expected_intertwining_sign,
    intertwining_sign,
    minus_identity_weyl_holds,
    random_element,
    row_reduction_identity_holds,
    weyl_conjugation_holds,
)


def test_kubota_x():
    assert kubota_x(SL2.identity(3)) == 1
    assert kubota_x(SL2.weyl(3)) == -1
    assert kubota_x(SL2.lower(3, 6)) == 6
    assert kubota_x(SL2.diagonal(3, 2)) == Fraction(1, 2)


def test_determinant_is_checked():
    with pytest.raises(ValueError):
        SL2(3, 1, 1, 1, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_weyl_element_squares_to_minus_identity(p):
    w = lift(SL2.weyl(p))
    assert cocycle(SL2.weyl(p), SL2.weyl(p)) == 1
    assert w * w == lift(SL2.minus_identity(p))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_cocycle_identity(p):
    rng = random.Random(p)
    for _ in range(200):
        g, h, k = (random_element(rng, p) for _ in range(3))
        assert cocycle(g, h) * cocycle(g @ h, k) == cocycle(g, h @ k) * cocycle(h, k)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_multiplication_is_associative(p):
    rng = random.Random(10 + p)
    for _ in range(50):
        x, y, z = (MpElement(random_element(rng, p), rng.choice((1, -1))) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_inverse():
    rng = random.Random(1)
    for _ in range(50):
        x = MpElement(random_element(rng, 2), -1)
        assert x * x.inverse() == lift(SL2.identity(2))


def test_eps_must_be_sign():
    with pytest.raises(ValueError):
        MpElement(SL2.identity(3), 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_minus_identity_times_weyl(p):
    assert minus_identity_weyl_holds(p)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_sign_identities_on_random_triples(p):
    rng = random.Random(100 + p)
    for _ in range(100):
        a, c, u = admissible_triple(rng, p)
        assert decomposition_sign_holds(p, a, c)
        assert weyl_conjugation_holds(p, c)
        assert row_reduction_identity_holds(p, a, c, u)
        assert intertwining_sign(p, a, c, u) == expected_intertwining_sign(p, a, c, u)


def test_intertwining_sign_on_degenerate_corner():
    # a + ua^{−1}c = 0 при u = −a²/c
    p, a, c = 3, Fraction(2), Fraction(3)
    u = -a * a / c
    assert intertwining_sign(p, a, c, u) == expected_intertwining_sign(p, a, c, u)


def test_decomposition_sign_can_be_nontrivial():
    # (1/2, 3) = (2/3) = −1 над ℚ₃
    p = 3
    product = mp_mul(lift(SL2.diagonal(p, 2)), lift(SL2.lower(p, 3)))
    assert product.eps == -1
    assert decomposition_sign_holds(p, Fraction(2), Fraction(3))


def test_theta_section_trichotomy():
    assert theta_section(SL2.upper(3, 5)) == 1
    assert theta_section(SL2.weyl(3)) == 1
    # c = 3/2, d = 8: (3/2, 8) = (3, 2) = −1
    assert theta_section(SL2(3, 1, 1, 3, 4) @ SL2.diagonal(3, Fraction(1, 2))) == -1
    assert theta_section(SL2.lower(3, 9)) == 1


def test_theta_section_needs_integral_matrix():
    with pytest.raises(ValueError):
        theta_section(SL2.diagonal(3, 3))


def test_neighbourhood_representatives():
    elements = list(neighbourhood_elements(2, 5))
    assert len(elements) == neighbourhood_size(2, 5) == 128
    profile = (3, 2, 3, 3)
    assert all(g.in_neighbourhood(profile) for g in elements)


def test_two_adic_splitting_over_all_pairs():
    report = splitting_check(2, 5)
    assert report.mode == "pairs"
    assert report.checked == report.pairs == 128 * 128
    assert report.as_dict()["reduction"] is None
    assert report.passed


def test_odd_splitting_by_generators():
    report = splitting_check(3, 4, rng=random.Random(3), theta_samples=300)
    assert report.mode == "generators"
    assert report.pairs == 3**16
    assert report.checked == 6 * 3**8
    assert report.as_dict()["reduction"] == GENERATOR_REDUCTION
    assert report.theta_checked == 300
    assert report.passed, report.counterexample


def test_depth_limit_notes():
    assert depth_limit_note(2, 5) is None
    assert depth_limit_note(3, 5) is None
    note = depth_limit_note(5, 4)
    assert note.startswith("p=5: глубина 4")
    assert str(6 * 5**11) in note


def test_splitting_depth_floor():
    with pytest.raises(ValueError):
        splitting_check(3, 3)


def test_trivial_section_fails_outside_neighbourhood():
    # σ(n̄(3), m(2)) = (2, 12) = (2, 3) = −1 над ℚ₃
    assert cocycle(SL2.lower(3, 3), SL2.diagonal(3, 2)) == -1
