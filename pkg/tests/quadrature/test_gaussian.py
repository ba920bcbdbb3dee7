# tests/quadrature/test_gaussian.py
# Tests for Gauss-Laguerre / trapezoid quadrature over the plane.

from __future__ import annotations

import math

import numpy as np
import pytest

from helpers.errors import QuadratureNotConverged
from helpers.fock import inner
from helpers.quadrature import (
    MIN_NODES,
    QuadratureGrid,
    angular_rule,
    integrate_gaussian,
    integrate_radial_weight,
    laguerre_rule,
    radial_cutoff,
)
from helpers.validation import ValidationError
from helpers.zpoly import ZPoly


def test_grid_validation_and_doubling() -> None:
    g = QuadratureGrid.from_dict({"radial_nodes": 16})
    assert g.angular_nodes == 64
    assert g.doubled().to_dict() == {"radial_nodes": 32, "angular_nodes": 128}
    with pytest.raises(ValidationError):
        QuadratureGrid.from_dict({"radial_nodes": MIN_NODES - 1})
    with pytest.raises(ValueError):
        QuadratureGrid(radial_nodes=4)


def test_rules_integrate_basic_moments() -> None:
    t, w = laguerre_rule(16)
    assert abs(np.sum(w) - 1.0) < 1e-13
    assert abs(np.sum(w * t**3) - 6.0) < 1e-11
    theta, wth = angular_rule(8)
    assert abs(np.sum(wth * np.ones_like(theta)) - 2 * math.pi) < 1e-13


@pytest.mark.parametrize(
    "p, expected, tol",
    [
        (ZPoly.const(1), math.pi, 1e-12),
        (ZPoly.z(), 0.0, 1e-12),
        (ZPoly.monomial(2, 2), 2 * math.pi, 1e-10),
    ],
)
def test_gaussian_examples(p: ZPoly, expected: float, tol: float) -> None:
    res = integrate_gaussian(p)
    assert abs(res.value - expected) <= tol
    assert res.error_estimate <= 1e-9


def test_scaled_gaussian_matches_closed_form() -> None:
    p = ZPoly.monomial(1, 1)
    res = integrate_gaussian(p, scale=2)
    assert abs(res.value - inner(ZPoly.const(1), p, scale=2).to_complex()) < 1e-12


def test_radial_weight_reduces_to_gaussian() -> None:
    phi = np.polynomial.Polynomial([0.0, 1.0])
    p = ZPoly.monomial(2, 2) + 1
    res = integrate_radial_weight(p.evaluate, phi, tol=1e-10)
    assert abs(res.value - 3 * math.pi) < 1e-9


def test_radial_weight_reports_non_convergence() -> None:
    phi = np.polynomial.Polynomial([0.0, 1.0])
    # grows almost as fast as the weight decays; Laguerre nodes cannot settle
    with pytest.raises(QuadratureNotConverged):
        integrate_radial_weight(lambda z: np.abs(z) ** 0.5 * np.exp(np.abs(z) ** 2 * 0.9), phi, tol=1e-14)


def test_radial_cutoff_passes_growth_and_critical_points() -> None:
    assert radial_cutoff(np.polynomial.Polynomial([0.0, 1.0, 1.0])) == 16.0
    # phi dips below zero until t = 2; the cutoff must sit past its minimum
    T = radial_cutoff(np.polynomial.Polynomial([0.0, -2.0, 1.0]), level=1.0)
    assert T >= 4.0
    with pytest.raises(ValidationError):
        radial_cutoff(np.polynomial.Polynomial([0.0, 1.0, -1.0]))
    with pytest.raises(ValidationError):
        radial_cutoff(np.polynomial.Polynomial([3.0]))


def test_truncated_radial_weight_matches_closed_form() -> None:
    # int_C |z|^2 e^{-|z|^4} dsigma = pi int_0^inf t e^{-t^2} dt = pi / 2
    phi = np.polynomial.Polynomial([0.0, 0.0, 1.0])
    res = integrate_radial_weight(
        lambda z: np.abs(z) ** 2, phi, t_max=radial_cutoff(phi), tol=1e-12
    )
    assert abs(res.value - math.pi / 2) < 1e-10
