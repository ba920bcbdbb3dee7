# tests/zpoly/test_calculus.py
# Tests for Wirtinger derivatives, Gaussian-derivative polynomials and affine changes of variable.

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers.math import binom, falling
from helpers.zpoly import (
    ZPoly,
    d_mixed,
    d_z,
    d_zbar,
    dilate,
    gauss_derivative,
    gr,
    monomials_up_to,
    mul_monomial,
    random_zpoly,
    translate,
)
from tests.conftest import gaussian_rationals, zpolys


def test_d_z_examples() -> None:
    assert d_z(ZPoly.monomial(2, 0)) == ZPoly.monomial(1, 0, 2)
    assert d_z(ZPoly.monomial(0, 3)).is_zero()
    assert d_z(ZPoly.monomial(2, 1), 2) == ZPoly.monomial(0, 1, 2)


def test_d_zbar_examples() -> None:
    assert d_zbar(ZPoly.monomial(0, 2)) == ZPoly.monomial(0, 1, 2)
    assert d_zbar(ZPoly.z()).is_zero()
    assert d_zbar(ZPoly.monomial(1, 2), 2) == ZPoly.monomial(1, 0, 2)


def test_negative_order_rejected() -> None:
    with pytest.raises(ValueError):
        d_z(ZPoly.z(), -1)


@given(zpolys(), zpolys())
def test_leibniz_rule(p: ZPoly, q: ZPoly) -> None:
    assert d_z(p * q) == d_z(p) * q + p * d_z(q)
    assert d_zbar(p * q) == d_zbar(p) * q + p * d_zbar(q)


@given(zpolys(4), st.integers(0, 3), st.integers(0, 3))
def test_mixed_derivatives_commute(p: ZPoly, i: int, j: int) -> None:
    assert d_z(d_zbar(p, j), i) == d_zbar(d_z(p, i), j) == d_mixed(p, i, j)


@given(zpolys())
def test_conj_intertwines_derivatives(p: ZPoly) -> None:
    assert d_z(p).conj() == d_zbar(p.conj())


@pytest.mark.parametrize("i", range(11))
def test_gauss_derivative_pure_orders(i: int) -> None:
    assert gauss_derivative(i, 0) == ZPoly.monomial(0, i, (-1) ** i)
    assert gauss_derivative(0, i) == ZPoly.monomial(i, 0, (-1) ** i)


def _weighted_chain(i: int, j: int) -> ZPoly:
    P = ZPoly.const(1)
    for _ in range(j):
        P = d_zbar(P) - mul_monomial(P, 1, 0)
    for _ in range(i):
        P = d_z(P) - mul_monomial(P, 0, 1)
    return P


def test_gauss_derivative_matches_recurrence() -> None:
    for i, j in monomials_up_to(8):
        assert gauss_derivative(i, j) == _weighted_chain(i, j), (i, j)


def test_gauss_derivative_closed_sum() -> None:
    # (-1)^j sum_n (-1)^n C(i, n) d^{i-n}(z^j) zbar^n
    for i, j in monomials_up_to(8):
        terms: dict = {}
        for n in range(i + 1):
            r = i - n
            if r > j:
                continue
            c = (-1) ** (j + n) * binom(i, n) * falling(j, r)
            terms[(j - r, n)] = c
        assert gauss_derivative(i, j) == ZPoly(terms), (i, j)


def test_gauss_derivative_mixed_example() -> None:
    assert gauss_derivative(1, 1) == ZPoly.monomial(1, 1) - 1


@given(zpolys(), gaussian_rationals, gaussian_rationals)
def test_translate_composes(p: ZPoly, a, b) -> None:
    assert translate(translate(p, a), b) == translate(p, a + b)
    assert translate(translate(p, a), -a) == p


def test_translate_evaluates_shift() -> None:
    p = ZPoly.monomial(2, 1) + ZPoly.zbar()
    z0 = gr(1, -2)
    q = translate(p, z0)
    z = 0.25 - 0.5j
    assert abs(complex(q.evaluate(z)) - complex(p.evaluate(z + complex(z0)))) < 1e-12


@given(zpolys(), st.sampled_from([Fraction(1, 2), Fraction(2), Fraction(-3, 2)]))
def test_dilate_round_trip(p: ZPoly, s: Fraction) -> None:
    assert dilate(dilate(p, s), 1 / s) == p


def test_dilate_rejects_zero() -> None:
    with pytest.raises(ValueError):
        dilate(ZPoly.z(), 0)


def test_random_zpoly_is_seeded(rng) -> None:
    import numpy as np

    a = random_zpoly(np.random.default_rng(3), 5)
    b = random_zpoly(np.random.default_rng(3), 5)
    assert a == b
    assert a.degree <= 5
    support = [(0, 0), (2, 2)]
    c = random_zpoly(rng, 4, support=support)
    assert set(c) <= set(support)
