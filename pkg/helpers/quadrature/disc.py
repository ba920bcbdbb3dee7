# helpers/quadrature/disc.py
# Disc domains U = {|z - center| < radius} and quadrature over them (Gauss-Legendre radial, trapezoid angular).

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

import numpy as np

from helpers.errors import QuadratureNotConverged
from helpers.validation import ensure_dict, path_join, require_rational
from helpers.zpoly import GaussianRational, ZPoly, dump_gaussian, format_rational, load_gaussian

from .grid import QuadratureGrid, QuadratureResult, angular_count, angular_rule, legendre_rule

log = logging.getLogger(__name__)

DISC_TOL = 1e-8


@dataclass(frozen=True)
class DomainSpec:
    """Disc U with |U| = diameter = 2 * radius."""

    center: GaussianRational
    radius: Fraction

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError(f"radius must be > 0 (got {self.radius})")

    @property
    def diameter(self) -> Fraction:
        return 2 * self.radius

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "domain") -> "DomainSpec":
        obj = ensure_dict(d, path=path)
        center_raw = obj.get("center", {"re": 0, "im": 0})
        center = load_gaussian(center_raw, path=path_join(path, "center"))
        radius = require_rational(obj, "radius", path=path, positive=True)
        return DomainSpec(center=center, radius=radius)

    def to_dict(self) -> Dict[str, Any]:
        return {"center": dump_gaussian(self.center), "radius": format_rational(self.radius)}


def _disc_once(
    fn: Callable[[np.ndarray], np.ndarray],
    center: complex,
    radius: float,
    radial: int,
    angular: int,
    weight_center: Optional[complex],
) -> tuple[complex, float]:
    x, wx = legendre_rule(radial)
    r = radius * x
    theta, wth = angular_rule(angular)
    z = center + r[:, None] * np.exp(1j * theta)[None, :]
    vals = fn(z)
    if weight_center is not None:
        vals = vals * np.exp(-np.abs(z - weight_center) ** 2)
    # polar Jacobian r dr, with dr = radius dx
    w = (radius * wx * r)[:, None] * wth
    return complex(np.sum(w * vals)), float(np.sum(w * np.abs(vals)))


def integrate_disc_fn(
    fn: Callable[[np.ndarray], np.ndarray],
    dom: DomainSpec,
    grid: QuadratureGrid = QuadratureGrid(),
    *,
    weight_on: bool = False,
    weight_center: Optional[GaussianRational] = None,
    angular: Optional[int] = None,
    tol: float = DISC_TOL,
) -> QuadratureResult:
    """
    int_U fn(z) [exp(-|z - z0|^2)] dsigma for a vectorized fn.

    z0 defaults to the disc center. Raises QuadratureNotConverged when the
    node-doubling difference exceeds tol * max(1, |value|).
    """
    center = complex(dom.center)
    wc = complex(weight_center if weight_center is not None else dom.center) if weight_on else None
    a = angular or grid.angular_nodes
    coarse, _ = _disc_once(fn, center, float(dom.radius), grid.radial_nodes, a, wc)
    fine_grid = grid.doubled()
    fine, mag = _disc_once(fn, center, float(dom.radius), fine_grid.radial_nodes, 2 * a, wc)
    err = abs(fine - coarse)
    if err > tol * max(1.0, abs(fine)):
        raise QuadratureNotConverged(
            f"disc quadrature error {err:.3e} exceeds {tol:.1e} on radius {dom.radius} "
            f"(radial={fine_grid.radial_nodes}, angular={fine_grid.angular_nodes}); raise --radial-nodes"
        )
    return QuadratureResult(fine, err, fine_grid, mag)


def integrate_disc(
    p: ZPoly,
    dom: DomainSpec,
    weight_on: bool = False,
    grid: QuadratureGrid = QuadratureGrid(),
    *,
    weight_center: Optional[GaussianRational] = None,
    tol: float = DISC_TOL,
) -> QuadratureResult:
    """int_U p dsigma, optionally carrying exp(-|z - z0|^2)."""
    if p.is_zero():
        return QuadratureResult(0j, 0.0, grid)
    # charges are measured about the disc center after translation, so bound by degree
    a = angular_count(grid, p.degree)
    return integrate_disc_fn(
        p.evaluate,
        dom,
        grid,
        weight_on=weight_on,
        weight_center=weight_center,
        angular=a,
        tol=tol,
    )


def disc_norm_sq(p: ZPoly, dom: DomainSpec, grid: QuadratureGrid = QuadratureGrid(), **kw: Any) -> QuadratureResult:
    """int_U |p|^2 dsigma (optionally weighted)."""
    q = p.conj() * p
    return integrate_disc(q, dom, grid=grid, **kw)
