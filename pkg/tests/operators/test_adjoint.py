# tests/operators/test_adjoint.py
# Tests for H, H* and weighted conjugation on polynomials.

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers.fock import inner
from helpers.operators import (
    D,
    DBAR,
    OperatorParams,
    apply_H,
    apply_H_star,
    conjugate_params,
    d_star,
    dbar_star,
    weighted_conjugate,
    word,
)
from helpers.zpoly import ZPoly, gauss_derivative, gr
from tests.conftest import zpolys


def test_weighted_conjugate_examples() -> None:
    assert weighted_conjugate([D], ZPoly.const(1)) == -ZPoly.zbar()
    assert weighted_conjugate([D, DBAR], ZPoly.const(1)) == ZPoly.monomial(1, 1) - 1
    with pytest.raises(ValueError):
        weighted_conjugate(["x"], ZPoly.const(1))


@pytest.mark.parametrize("i, j", [(0, 0), (1, 0), (2, 3), (3, 1)])
def test_weighted_conjugate_of_one_is_gauss_derivative(i: int, j: int) -> None:
    assert weighted_conjugate(word(i, j), ZPoly.const(1)) == gauss_derivative(i, j)


def test_apply_H_examples() -> None:
    p1 = OperatorParams(k=1, alpha=1, beta=0, gamma=0, c=2)
    assert apply_H(p1, ZPoly.monomial(1, 1)) == 1 + ZPoly.monomial(1, 1, 2)
    p2 = OperatorParams(k=1, alpha=0, beta=1, gamma=0)
    assert apply_H(p2, ZPoly.zbar()) == 1
    p3 = OperatorParams(k=2, alpha=1, beta=0, gamma=0)
    assert apply_H(p3, ZPoly.monomial(2, 2)) == 4


def test_apply_H_star_examples() -> None:
    dbar_case = OperatorParams(k=1, alpha=0, beta=1, gamma=0)
    assert apply_H_star(dbar_case, ZPoly.z()) == ZPoly.monomial(1, 1) - 1
    ddbar_case = OperatorParams(k=1, alpha=1, beta=0, gamma=0)
    assert apply_H_star(ddbar_case, ZPoly.const(1)) == ZPoly.monomial(1, 1) - 1
    with_c = OperatorParams(k=1, alpha=1, beta=0, gamma=0, c=5)
    assert apply_H_star(with_c, ZPoly.zero()).is_zero()


# OperatorParams rejects all-zero coefficients
params_strategy = (
    st.tuples(
        st.integers(1, 2),
        st.sampled_from([0, 1, -2]),
        st.sampled_from([0, 1, 3]),
        st.sampled_from([0, 1]),
        st.sampled_from([gr(0), gr(1, 2), gr(0, -1)]),
    )
    .filter(lambda t: any(t[1:4]))
    .map(lambda t: OperatorParams(*t))
)


@given(params_strategy, zpolys(3), zpolys(3))
def test_weighted_adjointness(params: OperatorParams, u: ZPoly, phi: ZPoly) -> None:
    assert inner(apply_H(params, u), phi) == inner(u, apply_H_star(params, phi))


@given(params_strategy, zpolys(3))
def test_conjugation_symmetry(params: OperatorParams, p: ZPoly) -> None:
    assert apply_H(params, p).conj() == apply_H(conjugate_params(params), p.conj())


@given(zpolys(3))
def test_single_letter_adjoints(p: ZPoly) -> None:
    assert d_star(p).conj() == dbar_star(p.conj())


@given(params_strategy)
def test_params_strategy_only_draws_valid_operators(params: OperatorParams) -> None:
    assert params.alpha or params.beta or params.gamma
    assert params.k in (1, 2)
