# tests/fock/test_inner.py
# Tests for closed-form Gaussian inner products (units of pi).

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from helpers.fock import PiRational, inner, monomial_inner, norm_sq
from helpers.zpoly import ZPoly, gr, monomials_up_to
from tests.conftest import gaussian_rationals, zpolys


def test_monomial_rule_examples() -> None:
    assert inner(ZPoly.const(1), ZPoly.const(1)) == PiRational.of(1)
    assert inner(ZPoly.z(), ZPoly.zbar()).is_zero()
    assert norm_sq(ZPoly.monomial(2, 0)) == PiRational.of(2)
    assert norm_sq(ZPoly.monomial(1, 1)) == PiRational.of(2)


def test_charge_selection_rule() -> None:
    exps = monomials_up_to(6)
    for a, b in exps:
        for c, d in exps:
            v = monomial_inner(a, b, c, d)
            if a - b != c - d:
                assert v == 0
            else:
                assert v > 0


def test_scaled_weight() -> None:
    # int |z|^2 e^{-2|z|^2} = pi / 4
    assert norm_sq(ZPoly.z(), scale=2) == PiRational.of(Fraction(1, 4))
    with pytest.raises(ValueError):
        inner(ZPoly.z(), ZPoly.z(), scale=0)


@given(zpolys(), zpolys())
def test_hermitian_symmetry(p: ZPoly, q: ZPoly) -> None:
    assert inner(p, q) == inner(q, p).conj()


@given(zpolys(), zpolys(), gaussian_rationals)
def test_sesquilinear(p: ZPoly, q: ZPoly, c) -> None:
    assert inner(p, q.scale(c)) == inner(p, q) * c
    assert inner(p.scale(c), q) == inner(p, q) * c.conj()


@given(zpolys())
def test_norm_is_real_and_nonnegative(p: ZPoly) -> None:
    n = norm_sq(p)
    assert n.coeff.im == 0
    assert n.real >= 0
    assert (n.real == 0) == p.is_zero()


def test_pi_rational_json() -> None:
    v = PiRational.of(gr("1/2", 1))
    doc = v.to_json()
    assert doc["pi_rational"] == "1/2"
    assert doc["pi_rational_im"] == "1"
    assert "float_im" in doc
    assert "pi_rational_im" not in PiRational.of(3).to_json()
