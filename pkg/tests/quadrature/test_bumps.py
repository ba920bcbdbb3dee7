# tests/quadrature/test_bumps.py
# Tests for the weak-solution residual over compactly supported bumps.

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from helpers.operators import OperatorParams, apply_H
from helpers.quadrature import BumpSpec, bump_derivative, default_battery, profile_poly, weak_residual
from helpers.zpoly import ZPoly, gr, random_zpoly

DBAR_K1 = OperatorParams(k=1, alpha=0, beta=1, gamma=0)
DDBAR_K1 = OperatorParams(k=1, alpha=1, beta=0, gamma=0)


def test_bump_spec_validation() -> None:
    assert BumpSpec.from_dict({"radius": "3/2", "p": 1}).radius == Fraction(3, 2)
    with pytest.raises(ValueError):
        BumpSpec(radius=Fraction(0))
    assert len(default_battery()) == 24


def test_profile_recurrence_first_step() -> None:
    # B'(x) = -y^2 B with y = 1/(1-x)
    assert list(profile_poly(1).coef) == [0.0, 0.0, -1.0]


def test_bump_derivative_matches_finite_difference() -> None:
    spec = BumpSpec(center=gr(Fraction(1, 4)), radius=Fraction(1), p=1, q=0)
    z = np.array([0.1 + 0.2j, -0.3 + 0.1j])
    h = 1e-6
    f = lambda w: bump_derivative(spec, 0, 0, w)  # noqa: E731
    # d = (d/dx - i d/dy) / 2
    dz_fd = ((f(z + h) - f(z - h)) / (2 * h) - 1j * (f(z + 1j * h) - f(z - 1j * h)) / (2 * h)) / 2
    np.testing.assert_allclose(bump_derivative(spec, 1, 0, z), dz_fd, atol=1e-6)


@pytest.mark.parametrize(
    "u, f, params",
    [
        (ZPoly.zbar(), ZPoly.const(1), DBAR_K1),
        (ZPoly.monomial(1, 1) - 1, ZPoly.const(1), DDBAR_K1),
        (ZPoly.zero(), ZPoly.zero(), DDBAR_K1),
    ],
)
def test_classical_solutions_are_weak(u: ZPoly, f: ZPoly, params: OperatorParams) -> None:
    assert weak_residual(u, f, params) <= 1e-6


def test_wrong_right_hand_side_is_detected() -> None:
    assert weak_residual(ZPoly.zbar(), ZPoly.const(2), DBAR_K1) > 1e-3


def test_random_pairs_all_cases(rng) -> None:
    for params in (
        DBAR_K1,
        DDBAR_K1,
        OperatorParams(k=2, alpha=0, beta=0, gamma=1, c=gr(1, 1)),
        OperatorParams(k=1, alpha=1, beta=1, gamma=1),
    ):
        u = random_zpoly(rng, 4)
        assert weak_residual(u, apply_H(params, u), params) <= 1e-6
