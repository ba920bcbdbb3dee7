# services/oracle.py
# Cross-validation suite: closed-form inner products against quadrature, disc integrals, weak residuals of (u, H u).

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence

import numpy as np

from helpers.fock import inner
from helpers.operators import OperatorParams, apply_H
from helpers.quadrature import (
    DEFAULT_WEAK_GRID,
    DomainSpec,
    QuadratureGrid,
    integrate_disc,
    integrate_gaussian,
    weak_residual,
)
from helpers.threading import ordered_map
from helpers.zpoly import GaussianRational, ZPoly, monomials_up_to, random_zpoly, zpoly_to_json

log = logging.getLogger(__name__)

SCHEMA = "oracle_report"
CSV_HEADER = ("check", "label", "value", "expected", "abs_error", "passed")

CLOSED_FORM_TOL = 1e-10
# float roundoff floor for quadratures whose integrand cancels over theta, in units of eps * int |integrand|
ROUNDOFF_FACTOR = 256
DISC_CHECK_TOL = 1e-10
WEAK_CHECK_TOL = 1e-6

# (alpha, beta, gamma) families cycled through by the weak-residual pairs
WEAK_FAMILIES = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1))
WEAK_CONSTANTS = (GaussianRational(0), GaussianRational(Fraction(1, 2)), GaussianRational(0, 1))


@dataclass(frozen=True)
class OracleCheck:
    check: str
    label: str
    value: complex
    expected: complex
    tolerance: float

    @property
    def abs_error(self) -> float:
        return abs(self.value - self.expected)

    @property
    def passed(self) -> bool:
        return self.abs_error <= self.tolerance

    def row(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "label": self.label,
            "value": repr(self.value.real) if not self.value.imag else repr(self.value),
            "expected": repr(self.expected.real) if not self.expected.imag else repr(self.expected),
            "abs_error": repr(self.abs_error),
            "passed": "true" if self.passed else "false",
        }

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "label": self.label,
            "value": [self.value.real, self.value.imag],
            "expected": [self.expected.real, self.expected.imag],
            "abs_error": self.abs_error,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class OracleReport:
    checks: tuple[OracleCheck, ...]
    seed: int
    grid: QuadratureGrid

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[OracleCheck]:
        return [c for c in self.checks if not c.passed]

    def rows(self) -> list[Dict[str, Any]]:
        return [c.row() for c in self.checks]

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "schema_version": 1,
            "seed": self.seed,
            "grid": self.grid.to_dict(),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def closed_form_tolerance(exact: complex, magnitude: float) -> float:
    """
    CLOSED_FORM_TOL * max(1, |exact|) plus the roundoff floor ROUNDOFF_FACTOR * eps * magnitude.

    The floor only matters where the integrand cancels (off-charge monomials, whose
    closed form is 0); on-charge it is a small fraction of the relative term.
    """
    eps = float(np.finfo(float).eps)
    return CLOSED_FORM_TOL * max(1.0, abs(exact)) + ROUNDOFF_FACTOR * eps * magnitude


def _closed_form(m: int, n: int) -> complex:
    """int z^m zbar^n e^{-|z|^2} dsigma = <1, z^m zbar^n>."""
    v = inner(ZPoly.const(1), ZPoly.monomial(m, n))
    return v.to_complex()


def monomial_checks(
    max_degree: int = 32,
    grid: QuadratureGrid = QuadratureGrid(),
    *,
    workers: int = 1,
) -> list[OracleCheck]:
    """Quadrature of every z^m zbar^n with m + n <= max_degree against the closed form."""

    def one(mn: tuple[int, int]) -> OracleCheck:
        m, n = mn
        q = integrate_gaussian(ZPoly.monomial(m, n), grid)
        exact = _closed_form(m, n)
        tol = closed_form_tolerance(exact, q.magnitude)
        return OracleCheck("gaussian_monomial", f"z^{m} zbar^{n}", q.value, exact, tol)

    return ordered_map(one, monomials_up_to(max_degree), workers=workers)


def inner_product_checks(
    rng: np.random.Generator,
    count: int = 10,
    degree: int = 6,
    grid: QuadratureGrid = QuadratureGrid(),
) -> list[OracleCheck]:
    """<p, q> closed form against quadrature of conj(p) q for seeded random pairs."""
    out: list[OracleCheck] = []
    for idx in range(count):
        p = random_zpoly(rng, degree)
        q = random_zpoly(rng, degree)
        res = integrate_gaussian(p.conj() * q, grid)
        exact = inner(p, q).to_complex()
        tol = closed_form_tolerance(exact, res.magnitude)
        out.append(OracleCheck("gaussian_inner", f"pair {idx}", res.value, exact, tol))
    return out


def disc_checks(grid: QuadratureGrid = QuadratureGrid()) -> list[OracleCheck]:
    unit = DomainSpec(center=GaussianRational(0), radius=Fraction(1))
    cases = (
        ("1", ZPoly.const(1), math.pi),
        ("z zbar", ZPoly.monomial(1, 1), math.pi / 2),
        ("z", ZPoly.z(), 0.0),
    )
    out: list[OracleCheck] = []
    for label, p, expected in cases:
        res = integrate_disc(p, unit, grid=grid)
        out.append(OracleCheck("disc", f"unit disc {label}", res.value, complex(expected), DISC_CHECK_TOL))
    return out


@dataclass(frozen=True)
class WeakPair:
    params: OperatorParams
    u: ZPoly
    f: ZPoly

    def to_json(self) -> Dict[str, Any]:
        return {"params": self.params.to_dict(), "u": zpoly_to_json(self.u), "f": zpoly_to_json(self.f)}


def weak_pairs(rng: np.random.Generator, count: int = 10, degree: int = 4) -> list[WeakPair]:
    """Seeded (u, f = H u) pairs cycling through parameter families, k in {1, 2}."""
    out: list[WeakPair] = []
    for idx in range(count):
        a, b, g = WEAK_FAMILIES[idx % len(WEAK_FAMILIES)]
        params = OperatorParams(
            k=1 + (idx // len(WEAK_FAMILIES)) % 2,
            alpha=Fraction(a),
            beta=Fraction(b),
            gamma=Fraction(g),
            c=WEAK_CONSTANTS[idx % len(WEAK_CONSTANTS)],
        )
        u = random_zpoly(rng, degree)
        out.append(WeakPair(params=params, u=u, f=apply_H(params, u)))
    return out


def weak_checks(
    pairs: Sequence[WeakPair],
    grid: QuadratureGrid = DEFAULT_WEAK_GRID,
    *,
    workers: int = 1,
) -> list[OracleCheck]:
    """Classical solutions are weak solutions: residual 0 up to quadrature error."""

    def one(item: tuple[int, WeakPair]) -> OracleCheck:
        idx, pair = item
        res = weak_residual(pair.u, pair.f, pair.params, grid=grid)
        return OracleCheck("weak_residual", f"pair {idx} ({pair.params})", complex(res), 0j, WEAK_CHECK_TOL)

    return ordered_map(one, list(enumerate(pairs)), workers=workers)


def run_oracle(
    *,
    seed: int = 0,
    max_degree: int = 32,
    grid: QuadratureGrid = QuadratureGrid(),
    weak_grid: QuadratureGrid = DEFAULT_WEAK_GRID,
    pairs: int = 10,
    workers: int = 1,
) -> OracleReport:
    """Full cross-validation: monomials, random inner products, discs, weak residuals."""
    rng = np.random.default_rng(seed)
    checks: list[OracleCheck] = []
    checks += monomial_checks(max_degree, grid, workers=workers)
    checks += inner_product_checks(rng, grid=grid)
    checks += disc_checks(grid)
    checks += weak_checks(weak_pairs(rng, pairs), weak_grid, workers=workers)
    rep = OracleReport(checks=tuple(checks), seed=seed, grid=grid)
    log.info("oracle: %d checks, %d failed", len(checks), len(rep.failures()))
    for c in rep.failures():
        log.warning("oracle check failed: %s %s error=%.3e", c.check, c.label, c.abs_error)
    return rep
