# helpers/quadrature/grid.py
# Quadrature grid configuration and the (value, error estimate) result record.

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Any, Dict

import numpy as np
from scipy.special import roots_laguerre, roots_legendre

from helpers.validation import ensure_dict, require_int

MIN_NODES = 8


@dataclass(frozen=True)
class QuadratureGrid:
    """
    radial_nodes: Gauss nodes in the radial variable (Laguerre in t = r^2, or Legendre on a disc)
    angular_nodes: uniform trapezoid nodes in theta
    """

    radial_nodes: int = 64
    angular_nodes: int = 64

    def __post_init__(self) -> None:
        if self.radial_nodes < MIN_NODES or self.angular_nodes < MIN_NODES:
            raise ValueError(
                f"quadrature grids need >= {MIN_NODES} nodes "
                f"(got radial={self.radial_nodes}, angular={self.angular_nodes})"
            )

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "grid") -> "QuadratureGrid":
        obj = ensure_dict(d, path=path)
        return QuadratureGrid(
            radial_nodes=require_int(obj, "radial_nodes", path=path, min_v=MIN_NODES, default=64),
            angular_nodes=require_int(obj, "angular_nodes", path=path, min_v=MIN_NODES, default=64),
        )

    def doubled(self) -> "QuadratureGrid":
        return replace(self, radial_nodes=2 * self.radial_nodes, angular_nodes=2 * self.angular_nodes)

    def to_dict(self) -> Dict[str, int]:
        return {"radial_nodes": self.radial_nodes, "angular_nodes": self.angular_nodes}


@dataclass(frozen=True)
class QuadratureResult:
    """
    value: the integral
    error_estimate: |fine - coarse| under node doubling
    magnitude: the same rule applied to |integrand| (scale for relative tolerances)
    """

    value: complex
    error_estimate: float
    grid: QuadratureGrid
    magnitude: float = 0.0

    @property
    def real(self) -> float:
        return float(self.value.real)


@lru_cache(maxsize=32)
def laguerre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights for int_0^inf g(t) e^{-t} dt."""
    t, w = roots_laguerre(n)
    return np.asarray(t), np.asarray(w)


@lru_cache(maxsize=32)
def legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights for int_0^1 g(x) dx."""
    x, w = roots_legendre(n)
    return (np.asarray(x) + 1.0) / 2.0, np.asarray(w) / 2.0


def angular_rule(n: int) -> tuple[np.ndarray, float]:
    """Uniform theta nodes on [0, 2pi) and the common weight."""
    return 2.0 * np.pi * np.arange(n) / n, 2.0 * np.pi / n


def angular_count(grid: QuadratureGrid, max_charge: int) -> int:
    """Trapezoid is exact for e^{iq theta} when the node count exceeds |q|."""
    return max(grid.angular_nodes, abs(max_charge) + 1)


__all__ = [
    "MIN_NODES",
    "QuadratureGrid",
    "QuadratureResult",
    "laguerre_rule",
    "legendre_rule",
    "angular_rule",
    "angular_count",
]
