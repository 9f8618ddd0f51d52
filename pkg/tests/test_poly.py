from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from randembed.poly import (
    IntPolynomial,
    StirlingTable,
    falling_factorial_poly,
    harmonic,
    rising_factorial_poly,
    shift_poly,
    stirling_signed,
    stirling_unsigned,
)

from conftest import brute_cycle_counts

coeff_lists = st.lists(st.integers(-10**6, 10**6), max_size=9)


def test_stirling_examples():
    assert stirling_unsigned(4, 2) == 11
    assert stirling_unsigned(8, 3) == 13132
    for n in range(10):
        assert stirling_unsigned(n, n) == 1
    assert stirling_unsigned(5, 0) == 0
    assert stirling_signed(4, 2) == 11 and stirling_signed(4, 3) == -6


@pytest.mark.parametrize("n", range(0, 9))
def test_stirling_matches_brute_force(n):
    counts = brute_cycle_counts(n)
    for k in range(n + 1):
        assert stirling_unsigned(n, k) == counts.get(k, 0)


def test_stirling_row_sums_and_recurrence():
    t = StirlingTable(60)
    for n in range(60):
        assert sum(t.row(n)) == factorial(n)
        for k in range(1, n + 1):
            assert t(n + 1, k) == n * t(n, k) + t(n, k - 1)


def test_stirling_out_of_range():
    t = StirlingTable(5)
    with pytest.raises(ValueError):
        t(6, 1)
    with pytest.raises(ValueError):
        t(3, 4)
    with pytest.raises(ValueError):
        t(3, -1)


def test_rising_factorial_examples():
    assert rising_factorial_poly(2).coeffs == (0, 2, 3, 1)
    assert rising_factorial_poly(0).coeffs == (0, 1)


@pytest.mark.parametrize("n", range(0, 40))
def test_rising_factorial_is_stirling_row(n):
    direct = IntPolynomial([0, 1])
    for i in range(1, n + 1):
        direct = direct * IntPolynomial([i, 1])
    p = rising_factorial_poly(n)
    assert p == direct
    assert p.coeffs == StirlingTable(n + 1).row(n + 1)


def test_falling_factorial_signed_stirling():
    for n in range(12):
        f = falling_factorial_poly(n)
        assert list(f.coeffs) == [stirling_signed(n + 1, k) for k in range(n + 2)]


def test_shift_examples():
    f = IntPolynomial([0, 0, 1])
    assert shift_poly(f, 1) == IntPolynomial([1, -2, 1])
    assert shift_poly(f, 0) == f
    with pytest.raises(ValueError):
        shift_poly(f, -1)


@given(coeff_lists, st.integers(0, 12), st.integers(0, 12))
def test_shift_homomorphism(coeffs, a, b):
    f = IntPolynomial(coeffs)
    assert shift_poly(shift_poly(f, a), b) == shift_poly(f, a + b)


@given(coeff_lists, coeff_lists, st.integers(0, 12), st.integers(-5, 5))
def test_shift_linear_and_pointwise(c1, c2, t, x):
    f, g = IntPolynomial(c1), IntPolynomial(c2)
    assert shift_poly(f + g, t) == shift_poly(f, t) + shift_poly(g, t)
    assert shift_poly(f, t)(x) == f(x - t)


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(6) == Fraction(49, 20)
    assert harmonic(100) == sum(Fraction(1, i) for i in range(1, 101))
    with pytest.raises(ValueError):
        harmonic(-1)


def test_polynomial_arithmetic():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.degree == 1 and p.coeffs == (1, 2)
    assert IntPolynomial().degree == -1
    assert (p * p).coeffs == (1, 4, 4)
    assert (p - p) == IntPolynomial()
    assert (p * 3).coeffs == (3, 6)
    assert p.derivative().coeffs == (2,)
