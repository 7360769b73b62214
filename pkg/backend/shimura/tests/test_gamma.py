import pytest

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from core.exceptions import UnsupportedCaseError
from core.suites import run_suite
from padic.numbers import PAdic
from scalars.ratfunc import RatFunc
from shimura.gamma import (
    c_factor,
    expected_trivial_gamma,
    expected_two_adic_gamma,
    gamma_assemble,
    pole_scan,
    pole_value,
)
from shimura.params import SSParams, alpha_representatives
from shimura.suites import supported_characters


def test_c_factor_odd_is_constant():
    tau = TameCharacter.from_exponents(5, 8, 1, 0)
    expected = tau(PAdic.from_int(5, 2)) ** -2
    assert c_factor(tau) == RatFunc.constant(5, expected)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("omega", [1, -1])
@pytest.mark.parametrize("l", [2, 3])
def test_trivial_twist(p, omega, l):
    for alpha in alpha_representatives(p):
        params = SSParams(p, l, alpha, omega)
        assert gamma_assemble(params, TameCharacter.trivial(p)) == expected_trivial_gamma(params)


def test_trivial_twist_other_uniformizer():
    params = SSParams(5, 2, uniformizer_unit=2)
    gamma = gamma_assemble(params, TameCharacter.trivial(5, uniformizer_unit=2))
    assert gamma == expected_trivial_gamma(params)


@pytest.mark.parametrize("k", range(8))
@pytest.mark.parametrize("sign", [1, -1])
def test_two_adic_gamma(k, sign):
    tau = TameCharacter.from_exponents(2, 8, k, 0)
    gamma = gamma_assemble(SSParams(2, 2), tau, AdditiveCharacter(2, sign))
    assert gamma == expected_two_adic_gamma(tau)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_pole_scan(p):
    for alpha in alpha_representatives(p):
        poles = set()
        for omega in (1, -1):
            params = SSParams(p, 2, alpha, omega)
            report = pole_scan(params)
            assert report.pole.residue_exponent == (p - 1) // 2
            assert report.pole.value_on_uniformizer == pole_value(params)
            assert report.pole.value_on_uniformizer**2 == 1
            assert sum(row["order"] < 0 for row in report.candidates) == 1
            poles.add(report.pole)
        assert len(poles) == 1


def test_pole_scan_zero_slice():
    report = pole_scan(SSParams(5, 2))
    assert report.zero is not None
    assert report.zero.value_on_uniformizer == -report.pole.value_on_uniformizer
    canceled = [row["tau"] for row in report.candidates if row["canceled"]]
    assert len(canceled) == 3
    assert report.zero in canceled
    assert report.pole not in canceled


def test_pole_scan_rejects_two():
    with pytest.raises(UnsupportedCaseError):
        pole_scan(SSParams(2, 2))


@pytest.mark.parametrize("p", [3, 5])
def test_twisting_by_unit_squares(p):
    params = SSParams(p, 2)
    psi = params.default_psi()
    for tau in supported_characters(p, zeta_exponents=(1, 2)):
        gamma = gamma_assemble(params, tau, psi)
        assert gamma_assemble(params, tau, psi.twisted(4)) == gamma


def test_beta_sign_does_not_change_gamma(settings):
    params = SSParams(3, 2)
    tau = TameCharacter.from_exponents(3, 8, 3, 1)
    positive = gamma_assemble(params, tau)
    settings.BETA_SIGN = -1
    assert gamma_assemble(params, tau) == positive


@pytest.mark.parametrize("name", ["q2", "trivial_gamma"])
def test_suites_pass(name):
    result = run_suite(name)
    assert result.passed, result.failures[:1]
