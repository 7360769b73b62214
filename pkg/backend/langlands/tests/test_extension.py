import random
from fractions import Fraction

import pytest

from core.exceptions import UnsupportedCaseError
from langlands.extension import RamifiedExt
from langlands.suites import sample_element
from padic.hilbert import hilbert
from padic.numbers import PAdic
from padic.squares import class_representatives


def extension(p, degree=4):
    return RamifiedExt(degree, PAdic.uniformizer(p))


def test_rejects_non_uniformizer():
    with pytest.raises(ValueError):
        RamifiedExt(4, PAdic.from_int(5, 25))


@pytest.mark.parametrize("degree", [2, 4, 6])
def test_totally_ramified(degree):
    ext = extension(5, degree)
    assert ext.zeta().valuation == 1
    assert ext.from_base(5).valuation == degree
    assert ext.zeta() ** degree == ext.from_base(ext.modulus)


def test_multiplication_reduces_by_minimal_polynomial():
    ext = extension(3)
    x = ext.element([1, 0, 0, 2])
    y = ext.element([0, 0, 1])
    assert x * y == ext.element([0, 6, 1])


def test_regular_matrix_of_zeta():
    ext = extension(3)
    matrix = ext.zeta().regular_matrix()
    for i in range(3):
        assert matrix[i][i + 1] == 1
    assert matrix[3][0] == ext.modulus
    assert sum(not entry.is_zero for row in matrix for entry in row) == 4


def test_norm_of_zeta():
    ext = extension(5, 4)
    assert ext.zeta().norm() == -ext.modulus
    assert ext.from_base(2).norm() == 16


@pytest.mark.parametrize("p", [3, 5, 7])
def test_valuation_matches_norm(p):
    rng = random.Random(p)
    ext = extension(p, 4)
    for _ in range(5):
        x = sample_element(rng, ext) * ext.power_of_zeta(rng.randrange(6))
        assert x.valuation == x.norm().valuation


def test_discriminant():
    ext = extension(5, 2)
    assert ext.discriminant() == 20


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quadratic_discriminant_character(p):
    ext = extension(p, 2)
    det = ext.discriminant_character()
    for b in class_representatives(p):
        assert det(b) == hilbert(ext.modulus, b)
    rng = random.Random(p)
    for _ in range(5):
        assert det(sample_element(rng, ext).norm()) == 1


@pytest.mark.parametrize("degree", [4, 6, 8])
def test_discriminant_character_is_quadratic(degree):
    ext = RamifiedExt(degree, PAdic.from_fraction(7, Fraction(-7, 4)))
    det = ext.discriminant_character(uniformizer_unit=3)
    assert (det**2).is_trivial
    assert det.residue_exponent == 3


def test_discriminant_character_needs_odd_prime():
    with pytest.raises(UnsupportedCaseError):
        extension(2).discriminant_character()


def test_principal_units():
    ext = extension(5)
    assert ext.element([6, 3]).is_principal_unit
    assert not ext.element([2, 3]).is_principal_unit
    assert not ext.zeta().is_principal_unit
