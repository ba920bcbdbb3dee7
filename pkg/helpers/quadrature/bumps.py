# helpers/quadrature/bumps.py
# Smooth compactly supported test functions and the weak-solution residual of H u = f.

from __future__ import annotations

"""
helpers.quadrature.bumps
------------------------

Test functions

    b(z) = w^p wbar^q B(|w|^2 / R^2),   w = z - center,   B(x) = exp(-1 / (1 - x)) on x < 1

Derivatives are analytic. With F(s) = B(s / R^2):

    d^i dbar^j F(w wbar) = sum_m C(i,m) C(j,m) m! F^(i+j-m)(s) wbar^(i-m) w^(j-m)
    B^(n)(x) = Q_n(y) B(x),  y = 1/(1-x),  Q_0 = 1,  Q_{n+1} = y^2 (Q_n' - Q_n)

and Leibniz over the w^p wbar^q prefactor.

Weak form of H u = f against a bump b (no weight, transposed operator):

    int u (alpha d^k dbar^k b + (-1)^k beta dbar^k b + (-1)^k gamma d^k b + c b) dsigma = int f b dsigma
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from helpers.errors import QuadratureNotConverged
from helpers.math import binom, falling, fact
from helpers.operators import OperatorParams
from helpers.validation import ensure_dict, path_join, require_int, require_rational
from helpers.zpoly import GaussianRational, ZPoly, dump_gaussian, format_rational, load_gaussian

from .grid import QuadratureGrid, angular_rule, legendre_rule

log = logging.getLogger(__name__)

WEAK_TOL = 1e-7

# A bump battery's integrals are evaluated with denser radial nodes than Gaussian ones:
# the profile is smooth but steep near the rim.
DEFAULT_WEAK_GRID = QuadratureGrid(radial_nodes=128, angular_nodes=64)


@dataclass(frozen=True)
class BumpSpec:
    center: GaussianRational = GaussianRational(0)
    radius: Fraction = Fraction(1)
    p: int = 0
    q: int = 0

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError(f"bump radius must be > 0 (got {self.radius})")
        if self.p < 0 or self.q < 0:
            raise ValueError(f"bump modulation exponents must be >= 0 (got {self.p}, {self.q})")

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "bump") -> "BumpSpec":
        obj = ensure_dict(d, path=path)
        return BumpSpec(
            center=load_gaussian(obj.get("center", {}), path=path_join(path, "center")),
            radius=require_rational(obj, "radius", path=path, positive=True, default=1),
            p=require_int(obj, "p", path=path, min_v=0, default=0),
            q=require_int(obj, "q", path=path, min_v=0, default=0),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "center": dump_gaussian(self.center),
            "radius": format_rational(self.radius),
            "p": self.p,
            "q": self.q,
        }


def default_battery() -> list[BumpSpec]:
    """Shifted, dilated and modulated bumps used when no battery is given."""
    half = Fraction(1, 2)
    centers = [GaussianRational(0), GaussianRational(half), GaussianRational(0, -half)]
    out: list[BumpSpec] = []
    for c in centers:
        for radius in (Fraction(1), Fraction(3, 2)):
            for p, q in ((0, 0), (1, 0), (0, 1), (2, 1)):
                out.append(BumpSpec(center=c, radius=radius, p=p, q=q))
    return out


@lru_cache(maxsize=64)
def profile_poly(n: int) -> Polynomial:
    """Q_n with B^(n)(x) = Q_n(1/(1-x)) B(x)."""
    q = Polynomial([1.0])
    y2 = Polynomial([0.0, 0.0, 1.0])
    for _ in range(n):
        q = y2 * (q.deriv() - q)
    return q


def _profile_derivative(n: int, x: np.ndarray) -> np.ndarray:
    """B^(n)(x) on x in [0, 1); exactly 0 at and beyond the rim."""
    out = np.zeros_like(x)
    inside = x < 1.0
    y = 1.0 / (1.0 - x[inside])
    out[inside] = profile_poly(n)(y) * np.exp(-y)
    return out


def bump_derivative(spec: BumpSpec, i: int, j: int, z: np.ndarray) -> np.ndarray:
    """d^i dbar^j of the bump at complex points z."""
    w = z - complex(spec.center)
    wb = np.conj(w)
    r2 = float(spec.radius) ** 2
    x = (w * wb).real / r2
    out = np.zeros(z.shape, dtype=np.complex128)
    # Leibniz: a derivatives of z fall on w^p, b of zbar on wbar^q, the rest on F(w wbar)
    for a in range(min(i, spec.p) + 1):
        pa = falling(spec.p, a) * w ** (spec.p - a)
        for b in range(min(j, spec.q) + 1):
            qb = falling(spec.q, b) * wb ** (spec.q - b)
            ii, jj = i - a, j - b
            inner = np.zeros(z.shape, dtype=np.complex128)
            for m in range(min(ii, jj) + 1):
                order = ii + jj - m
                coeff = binom(ii, m) * binom(jj, m) * fact(m)
                f_n = _profile_derivative(order, x) / r2**order
                inner = inner + coeff * f_n * wb ** (ii - m) * w ** (jj - m)
            out = out + binom(i, a) * binom(j, b) * pa * qb * inner
    return out


def transposed_test(params: OperatorParams, spec: BumpSpec, z: np.ndarray) -> np.ndarray:
    """(alpha R + (-1)^k beta dbar^k + (-1)^k gamma d^k + c) applied to the bump."""
    k = params.k
    sign = -1.0 if k % 2 else 1.0
    out = complex(params.c) * bump_derivative(spec, 0, 0, z)
    if params.alpha:
        out = out + float(params.alpha) * bump_derivative(spec, k, k, z)
    if params.beta:
        out = out + sign * float(params.beta) * bump_derivative(spec, 0, k, z)
    if params.gamma:
        out = out + sign * float(params.gamma) * bump_derivative(spec, k, 0, z)
    return out


def _bump_pairing(
    u: ZPoly,
    f: ZPoly,
    params: OperatorParams,
    spec: BumpSpec,
    radial: int,
    angular: int,
) -> tuple[complex, complex]:
    x, wx = legendre_rule(radial)
    R = float(spec.radius)
    r = R * x
    theta, wth = angular_rule(angular)
    z = complex(spec.center) + r[:, None] * np.exp(1j * theta)[None, :]
    w = (R * wx * r)[:, None] * wth
    lhs = complex(np.sum(w * u.evaluate(z) * transposed_test(params, spec, z)))
    rhs = complex(np.sum(w * f.evaluate(z) * bump_derivative(spec, 0, 0, z)))
    return lhs, rhs


def weak_residuals(
    u: ZPoly,
    f: ZPoly,
    params: OperatorParams,
    bumps: Sequence[BumpSpec] | None = None,
    grid: QuadratureGrid = DEFAULT_WEAK_GRID,
    *,
    tol: float = WEAK_TOL,
) -> list[float]:
    """
    Relative residual |lhs - rhs| / max(1, |lhs|, |rhs|) per bump.

    Each pairing is integrated on grid and on its doubling; QuadratureNotConverged
    if they differ by more than tol (relative to the same scale).
    """
    battery = list(bumps) if bumps is not None else default_battery()
    max_deg = max(u.degree, f.degree, 0)
    out: list[float] = []
    for spec in battery:
        a = max(grid.angular_nodes, max_deg + spec.p + spec.q + 2 * params.k + 1)
        lhs, rhs = _bump_pairing(u, f, params, spec, grid.radial_nodes, a)
        lhs2, rhs2 = _bump_pairing(u, f, params, spec, 2 * grid.radial_nodes, 2 * a)
        scale = max(1.0, abs(lhs2), abs(rhs2))
        drift = max(abs(lhs2 - lhs), abs(rhs2 - rhs)) / scale
        if drift > tol:
            raise QuadratureNotConverged(
                f"weak pairing for bump {spec.to_dict()} moved by {drift:.3e} under node doubling"
            )
        out.append(abs(lhs2 - rhs2) / scale)
    return out


def weak_residual(
    u: ZPoly,
    f: ZPoly,
    params: OperatorParams,
    bumps: Sequence[BumpSpec] | None = None,
    grid: QuadratureGrid = DEFAULT_WEAK_GRID,
    *,
    tol: float = WEAK_TOL,
) -> float:
    """Max relative weak residual of H u = f over the bump battery."""
    res = weak_residuals(u, f, params, bumps, grid, tol=tol)
    worst = max(res, default=0.0)
    log.debug("weak residual over %d bumps: %.3e", len(res), worst)
    return worst
