import pytest

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from characters.weil import weil_factor
from core.exceptions import UnsupportedCaseError
from metaplectic.cocycle import MpElement
from metaplectic.matrices import SL2
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from shimura.integrands import (
    CLOSED,
    KERNEL_CASE,
    SHELLS,
    WEIL_CASE,
    intertwine_section,
    section_eval,
    unit_case,
    whittaker_eval,
)
from shimura.params import SectionData, SSParams
from shimura.suites import shell_test_points, supported_characters


def padic(p, value):
    return PAdic.from_int(p, value)


def test_whittaker_on_unit_c0():
    p = 5
    params = SSParams(p, 3)
    psi = AdditiveCharacter(p)
    zero = PAdic.zero(p)
    value = whittaker_eval(params, padic(p, 1), padic(p, 2 * p), zero, [zero])
    assert value == psi.dual()(padic(p, 2))


def test_whittaker_support():
    p = 3
    params = SSParams(p, 2)
    zero = PAdic.zero(p)
    assert whittaker_eval(params, padic(p, 2), padic(p, 3), zero, []).is_zero
    assert whittaker_eval(params, padic(p, 1), padic(p, 1), zero, []).is_zero
    assert whittaker_eval(params, padic(p, 1), padic(p, 3), padic(p, 1), []).is_zero
    assert whittaker_eval(params, padic(p, 4), padic(p, 9), padic(p, 3), []) == 1


def test_whittaker_needs_r_coordinates():
    p = 3
    zero = PAdic.zero(p)
    with pytest.raises(ValueError):
        whittaker_eval(SSParams(p, 3), padic(p, 1), zero, zero, [])


def trivial_data(p, **kwargs):
    return SectionData.build(SSParams(p, 2, **kwargs), TameCharacter.trivial(p))


def test_section_anchor():
    data = trivial_data(3)
    assert section_eval(data, SL2.lower(3, 9)) == 1
    assert section_eval(data, SL2.lower_borel(3, 4, 9)) == 1


def test_section_outside_support():
    data = trivial_data(3)
    assert section_eval(data, SL2.lower(3, 3)).is_zero
    assert section_eval(data, SL2.weyl(3)).is_zero


def test_section_transforms_by_borel():
    p = 3
    data = trivial_data(p)
    value = section_eval(data, SL2.diagonal(p, p))
    coefficient = weil_factor(data.psi, padic(p, p)) * Scalar.q_power(p, -1)
    assert value == RatFunc.monomial(coefficient, 1)


def test_section_is_genuine():
    data = trivial_data(5)
    g = SL2.diagonal(5, 5) @ SL2.lower(5, 25)
    assert section_eval(data, MpElement(g, -1)) == -section_eval(data, g)


def test_unit_cases():
    p = 5
    assert unit_case(trivial_data(p)) == KERNEL_CASE
    legendre = TameCharacter(p, Scalar.one(p), (p - 1) // 2)
    assert unit_case(SectionData.build(SSParams(p, 2), legendre)) == WEIL_CASE


def test_closed_path_rejects_other_characters():
    p = 5
    tau = TameCharacter(p, Scalar.one(p), 1)
    data = SectionData.build(SSParams(p, 2), tau)
    with pytest.raises(UnsupportedCaseError):
        intertwine_section(data, padic(p, 25), padic(p, 1), CLOSED)
    assert isinstance(intertwine_section(data, padic(p, 25), padic(p, 1), SHELLS), RatFunc)


def test_intertwining_needs_principal_unit():
    with pytest.raises(ValueError):
        intertwine_section(trivial_data(3), padic(3, 9), padic(3, 2))


def test_odd_unit_c0():
    p = 7
    data = trivial_data(p)
    c = padic(p, 3 * p)
    expected = RatFunc.monomial(weil_factor(data.psi, -c).inverse(), 1)
    assert intertwine_section(data, c, padic(p, 1)) == expected


def test_two_adic_middle_digit_vanishes():
    data = SectionData.build(SSParams(2, 2), TameCharacter.from_exponents(2, 8, 1, 0))
    assert intertwine_section(data, padic(2, 4), padic(2, 3)).is_zero
    assert intertwine_section(data, padic(2, 4), padic(2, 3), SHELLS).is_zero


@pytest.mark.parametrize("p", [2, 3, 5])
def test_closed_path_matches_shells(p):
    params = SSParams(p, 2, alpha=1 if p == 2 else 2)
    for tau in supported_characters(p, zeta_exponents=(1, 4)):
        data = SectionData.build(params, tau)
        for value in shell_test_points(p):
            for unit in (1, 1 + p):
                c, a = padic(p, value), padic(p, unit)
                assert intertwine_section(data, c, a, CLOSED) == intertwine_section(
                    data, c, a, SHELLS
                ), (tau, value, unit)
