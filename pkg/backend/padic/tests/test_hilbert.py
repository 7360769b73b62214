import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from padic.hilbert import hilbert, hilbert_oracle
from padic.numbers import PAdic
from padic.squares import class_representatives, is_square, legendre, square_class
from padic.suites import shifted_representatives


def test_units_pair_trivially_for_odd_p():
    for u in range(1, 7):
        for v in range(1, 7):
            assert hilbert(PAdic.from_int(7, u), PAdic.from_int(7, v)) == 1


def test_symbols_are_plain_ints():
    assert type(hilbert(PAdic.from_int(3, 2), PAdic.from_int(3, 3))) is int
    assert hilbert(PAdic.from_int(3, 2), PAdic.from_int(3, 3)) == -1
    assert [legendre(u, 5) for u in range(1, 5)] == [1, -1, -1, 1]
    assert all(type(legendre(u, 7)) is int for u in range(1, 7))


def test_minus_one_minus_one_over_q2():
    minus_one = PAdic.from_int(2, -1)
    assert hilbert(minus_one, minus_one) == -1
    assert hilbert_oracle(minus_one, minus_one) == -1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_closed_formula_matches_oracle(p):
    elements = shifted_representatives(p)
    for a in elements:
        for b in elements:
            assert hilbert(a, b) == hilbert_oracle(a, b), (a, b)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_bilinearity_over_representatives(p):
    reps = class_representatives(p)
    for a in reps:
        for b in reps:
            for c in reps:
                assert hilbert(a * b, c) == hilbert(a, c) * hilbert(b, c)


@hypothesis_settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=-3, max_value=3),
)
def test_z_minus_z_and_steinberg(p, value, shift):
    z = PAdic.from_int(p, value, precision=40).shift(shift)
    assert hilbert(z, -z) == 1
    one_minus = 1 - z
    if not one_minus.is_zero:
        assert hilbert(z, one_minus) == 1


def test_square_class_examples():
    assert square_class(PAdic.from_int(5, 1 + 5 * 17)) == PAdic.from_int(5, 1)
    assert square_class(PAdic.from_int(2, 1 + 8 * 11)) == PAdic.from_int(2, 1)
    assert square_class(PAdic.from_int(5, 2)) == PAdic.from_int(5, 2)


@pytest.mark.parametrize("p", [2, 3, 11])
def test_square_class_idempotent(p):
    for rep in class_representatives(p):
        assert square_class(rep) == rep
        assert square_class(square_class(rep * 7)) == square_class(rep * 7)


def test_zero_is_rejected():
    with pytest.raises(ZeroDivisionError):
        hilbert(PAdic.zero(3), PAdic.from_int(3, 2))


@pytest.mark.parametrize(
    "p, value, expected",
    [(3, 4, True), (3, 2, False), (3, 9 * 7, True), (3, 3, False), (2, 17, True), (2, 5, False)],
)
def test_is_square(p, value, expected):
    assert is_square(PAdic.from_int(p, value)) is expected
