# tests/test_math_basic.py
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers.math.basic import (
    SQRT_DIGITS,
    binom,
    fact,
    falling,
    is_rational_square,
    rational_sqrt,
    safe_div,
)


def test_binom_basic_and_out_of_range():
    assert binom(4, 2) == 6
    assert binom(5, 0) == 1
    assert binom(3, 4) == 0
    assert binom(3, -1) == 0


def test_falling():
    assert falling(5, 2) == 20
    assert falling(5, 0) == 1
    assert falling(3, 3) == 6
    assert falling(2, 3) == 0


def test_fact():
    assert fact(0) == 1
    assert fact(5) == 120
    with pytest.raises(ValueError):
        fact(-1)


def test_safe_div():
    assert safe_div(1.0, 2.0) == 0.5
    assert safe_div(0.0, 0.0) == 0.0
    assert safe_div(1.0, 0.0, default=-1.0) == -1.0


@pytest.mark.parametrize("x, r", [(Fraction(4), Fraction(2)), (Fraction(9, 4), Fraction(3, 2)), (Fraction(1, 16), Fraction(1, 4))])
def test_rational_sqrt_exact_squares(x: Fraction, r: Fraction):
    assert rational_sqrt(x) == r
    assert is_rational_square(x)


def test_rational_sqrt_non_square_is_close():
    s = rational_sqrt(Fraction(2))
    assert not is_rational_square(Fraction(2))
    assert abs(s * s - 2) < Fraction(1, 10 ** (SQRT_DIGITS - 1))
    assert s * s <= 2


def test_rational_sqrt_rejects_non_positive():
    with pytest.raises(ValueError):
        rational_sqrt(Fraction(0))
    with pytest.raises(ValueError):
        rational_sqrt(Fraction(-1))


@given(st.fractions(min_value=Fraction(1, 1000), max_value=1000).filter(lambda x: x > 0))
def test_rational_sqrt_reciprocal_is_exact(x: Fraction):
    assert rational_sqrt(x) * rational_sqrt(1 / x) == 1
