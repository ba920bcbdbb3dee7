# helpers/quadrature/gaussian.py
# Numerical integrals over the whole plane against exp(-lambda |z|^2) or a radial weight exp(-phi(|z|^2)).

from __future__ import annotations

"""
helpers.quadrature.gaussian
---------------------------

With z = sqrt(t) e^{i theta}, dsigma = (1/2) dt dtheta, so

    int_C g(z) e^{-|z|^2} dsigma = 1/2 int_0^inf int_0^{2pi} g(sqrt(t) e^{i theta}) e^{-t} dtheta dt

Radial: Gauss-Laguerre in t, or Gauss-Legendre on [0, T] for radial weights of
higher degree. Angular: uniform trapezoid with more nodes than the largest
charge |m - n| present, which integrates e^{iq theta} exactly.
The error estimate is the node-doubling difference; the finer value is returned.
"""

import logging
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from helpers.errors import QuadratureNotConverged
from helpers.validation import ValidationError
from helpers.zpoly import ZPoly

from .grid import (
    QuadratureGrid,
    QuadratureResult,
    angular_count,
    angular_rule,
    laguerre_rule,
    legendre_rule,
)

log = logging.getLogger(__name__)

RadialFn = Callable[[np.ndarray], np.ndarray]

# exp(-PHI_CUTOFF) is below double precision relative to any O(1) integrand
PHI_CUTOFF = 80.0
MAX_CUTOFF = 2.0**40


def _polar_points(t: np.ndarray, theta: np.ndarray, scale: float = 1.0) -> np.ndarray:
    r = np.sqrt(t / scale)
    return r[:, None] * np.exp(1j * theta)[None, :]


def _gaussian_once(p: ZPoly, radial: int, angular: int, scale: float) -> tuple[complex, float]:
    t, wt = laguerre_rule(radial)
    theta, wth = angular_rule(angular)
    vals = p.evaluate(_polar_points(t, theta, scale))
    w = 0.5 / scale * wth * wt[:, None]
    return complex(np.sum(w * vals)), float(np.sum(w * np.abs(vals)))


def integrate_gaussian(
    p: ZPoly,
    grid: QuadratureGrid = QuadratureGrid(),
    *,
    scale: Fraction | int | float = 1,
) -> QuadratureResult:
    """int_C p(z) exp(-scale |z|^2) dsigma (not the pi-unit value)."""
    s = float(scale)
    if s <= 0:
        raise ValueError(f"scale must be > 0 (got {scale})")
    if p.is_zero():
        return QuadratureResult(0j, 0.0, grid)
    a = angular_count(grid, max((abs(q) for q in p.charges()), default=0))
    coarse, _ = _gaussian_once(p, grid.radial_nodes, a, s)
    fine_grid = grid.doubled()
    fine, mag = _gaussian_once(p, fine_grid.radial_nodes, 2 * a, s)
    return QuadratureResult(fine, abs(fine - coarse), fine_grid, mag)


def radial_cutoff(phi: np.polynomial.Polynomial, *, level: float = PHI_CUTOFF) -> float:
    """
    Smallest power of two T past every critical point of phi with phi(T) >= level.

    Beyond T the weight exp(-phi) is monotone and below exp(-level).
    Raises ValidationError when phi does not grow.
    """
    coef = phi.trim().coef
    if len(coef) < 2 or coef[-1] <= 0:
        raise ValidationError(f"radial weight must grow in |z|^2 (leading coefficient {coef[-1]:.3g})")
    crit = [float(r.real) for r in phi.deriv().roots() if abs(r.imag) < 1e-12]
    T = 1.0
    while T <= max(crit, default=0.0) or phi(T) < level:
        T *= 2.0
        if T > MAX_CUTOFF:
            raise ValidationError(f"radial weight grows too slowly to truncate (phi({MAX_CUTOFF:.3g}) < {level})")
    return T


def integrate_radial_weight(
    g: Callable[[np.ndarray], np.ndarray],
    phi: RadialFn,
    grid: QuadratureGrid = QuadratureGrid(),
    *,
    kappa: float = 1.0,
    t_max: Optional[float] = None,
    tol: Optional[float] = None,
) -> QuadratureResult:
    """
    int_C g(z) exp(-phi(|z|^2)) dsigma for a radial weight phi(t).

    Without t_max: Gauss-Laguerre in kappa*t carries e^{-kappa t}; the remainder
    exp(kappa t - phi(t)) is evaluated in log form. kappa should match the leading
    growth of phi, so this path suits phi linear in t.
    With t_max: Gauss-Legendre on [0, t_max] against exp(-phi(t)) directly; pick
    t_max with radial_cutoff() for phi of higher degree.
    Raises QuadratureNotConverged when tol is given and the doubling error exceeds
    tol * max(1, |value|).
    """
    if kappa <= 0:
        raise ValueError(f"kappa must be > 0 (got {kappa})")
    if t_max is not None and t_max <= 0:
        raise ValueError(f"t_max must be > 0 (got {t_max})")

    def nodes(radial: int) -> tuple[np.ndarray, np.ndarray]:
        if t_max is not None:
            x, wx = legendre_rule(radial)
            t = t_max * x
            return t, t_max * wx * np.exp(-phi(t))
        s, ws = laguerre_rule(radial)
        t = s / kappa
        with np.errstate(divide="ignore"):
            log_w = np.log(ws)
        # Laguerre weight times exp(kappa t - phi), combined before exponentiating
        return t, np.exp(log_w + kappa * t - phi(t)) / kappa

    def once(radial: int, angular: int) -> tuple[complex, float]:
        t, wt = nodes(radial)
        theta, wth = angular_rule(angular)
        z = np.sqrt(t)[:, None] * np.exp(1j * theta)[None, :]
        w = (0.5 * wth * wt)[:, None]
        vals = g(z)
        return complex(np.sum(w * vals)), float(np.sum(w * np.abs(vals)))

    coarse, _ = once(grid.radial_nodes, grid.angular_nodes)
    fine_grid = grid.doubled()
    fine, mag = once(fine_grid.radial_nodes, fine_grid.angular_nodes)
    err = abs(fine - coarse)
    if tol is not None and err > tol * max(1.0, abs(fine)):
        raise QuadratureNotConverged(
            f"radial-weight quadrature error {err:.3e} exceeds {tol:.1e} "
            f"(radial={fine_grid.radial_nodes}, angular={fine_grid.angular_nodes})"
        )
    log.debug("radial-weight integral %.6e (+/- %.1e, t_max=%s)", fine.real, err, t_max)
    return QuadratureResult(fine, err, fine_grid, mag)
