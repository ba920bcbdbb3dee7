# services/transforms.py
# Scaled/translated Gaussian weights, bounded-domain solves and general radial-weight bound evaluators.

from __future__ import annotations

"""
services.transforms
-------------------

Scaled weight phi = lambda |z - z0|^2, s = sqrt(lambda):

    w = s (z - z0),  g(w) = f(z0 + w / s),  u(z) = v(w) / s^order

with order = k for the single d or dbar term and 2k for d^k dbar^k. The
standard-frame equation keeps the leading coefficient and uses c / s^order.

Bounded domains: the weighted solve is centered at the disc center, then the
polynomial kernel of H is used to lower int_U |u|^2 exp(-|z - z0|^2).

General radial weights phi(|z|^2) are evaluators only:
    dbar_k1:  4 |beta|^2  int |f|^2 / Lap(phi) e^{-phi}
    ddbar_k1: 16 |alpha|^2 int |f|^2 / Lap(e^phi Lap e^{-phi}) e^{-phi}
with Lap = 4 d dbar.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Optional

import numpy as np

from helpers.errors import PositivityViolated
from helpers.fock import PiRational, norm_sq
from helpers.linalg import nullspace
from helpers.math import rational_sqrt, safe_div
from helpers.operators import OperatorParams, assemble, conjugate_params, theorem_bound
from helpers.quadrature import (
    DISC_TOL,
    DomainSpec,
    QuadratureGrid,
    angular_rule,
    disc_norm_sq,
    integrate_radial_weight,
    legendre_rule,
    radial_cutoff,
)
from helpers.validation import ValidationError, ensure_dict, path_join, qpath, require_rational
from helpers.zpoly import (
    GaussianRational,
    ZPoly,
    conj,
    d_mixed,
    d_z,
    d_zbar,
    dilate,
    dump_gaussian,
    format_rational,
    linear_combine,
    load_gaussian,
    translate,
    zpoly_from_json,
    zpoly_to_json,
)

from .solver import SolveReport, TruncationSpec, solve_min_norm

log = logging.getLogger(__name__)

SCALED_SCHEMA = "scaled_solve_report"
DOMAIN_SCHEMA = "domain_report"
GENERAL_SCHEMA = "general_weight_bound"

SCALING_HEADER = ("case", "lambda", "z0_re", "z0_im", "k", "ratio")
DOMAIN_HEADER = ("case", "radius", "factor", "lhs", "rhs")

CASES = ("dbar_k1", "ddbar_k1")


def _check_radial(p: ZPoly, *, path: str) -> ZPoly:
    if p.is_zero():
        raise ValidationError(f"{qpath(path)} must be a nonzero polynomial in |z|^2")
    for (m, n), c in p.items():
        if m != n or c.im:
            raise ValidationError(
                f"{qpath(path)} must be real and radial: term z^{m} zbar^{n} with coefficient {c}"
            )
    top = max(m for m, _ in p)
    if top == 0 or p.coeff(top, top).re <= 0:
        raise ValidationError(f"{qpath(path)} needs a positive leading |z|^2 coefficient for integrability")
    return p


@dataclass(frozen=True)
class WeightSpec:
    """lambda |z - z0|^2, or a radial polynomial phi(|z|^2) for the evaluators."""

    lam: Fraction = Fraction(1)
    z0: GaussianRational = GaussianRational(0)
    radial: Optional[ZPoly] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.lam <= 0:
            raise ValidationError(f"{qpath('weight.lambda')} must be > 0 (got {self.lam})")
        if not isinstance(self.z0, GaussianRational):
            object.__setattr__(self, "z0", GaussianRational.coerce(self.z0))
        if self.radial is not None:
            _check_radial(self.radial, path="weight.radial")

    @property
    def s(self) -> Fraction:
        return rational_sqrt(self.lam)

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "weight") -> "WeightSpec":
        obj = ensure_dict(d, path=path)
        radial = None
        if obj.get("radial") is not None:
            radial = zpoly_from_json(obj["radial"], path=path_join(path, "radial"))
            _check_radial(radial, path=path_join(path, "radial"))
        return WeightSpec(
            lam=require_rational(obj, "lambda", path=path, positive=True, default=1),
            z0=load_gaussian(obj.get("z0", {"re": 0, "im": 0}), path=path_join(path, "z0")),
            radial=radial,
        )

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"lambda": format_rational(self.lam), "z0": dump_gaussian(self.z0)}
        if self.radial is not None:
            out["radial"] = zpoly_to_json(self.radial)
        return out


def to_standard_frame(p: ZPoly, w: WeightSpec) -> ZPoly:
    """g(w) = p(z0 + w / s)."""
    return dilate(translate(p, w.z0), 1 / w.s)


def from_standard_frame(v: ZPoly, w: WeightSpec) -> ZPoly:
    """p(z) = v(s (z - z0))."""
    return translate(dilate(v, w.s), -w.z0)


def rescale(p: ZPoly, lam: Fraction | int) -> ZPoly:
    """p(w / sqrt(lam)); rescale(rescale(p, lam), 1 / lam) == p exactly."""
    return to_standard_frame(p, WeightSpec(lam=Fraction(lam)))


def _corollary_case(params: OperatorParams) -> tuple[str, Fraction, int]:
    """(case, leading coefficient, derivative order) with the |coefficient| >= 1 precondition."""
    case = params.case
    if case is None:
        raise ValidationError(
            "scaled and bounded-domain corollaries need a single-term operator "
            f"(exactly one of alpha, beta, gamma nonzero; got {params})"
        )
    coef, order, name = {
        "ddbar": (params.alpha, 2 * params.k, "alpha"),
        "dbar": (params.beta, params.k, "beta"),
        "d": (params.gamma, params.k, "gamma"),
    }[case]
    if abs(coef) < 1:
        raise ValidationError(f"{qpath('params.' + name)} must satisfy |{name}| >= 1 for this corollary (got {coef})")
    return case, coef, order


def corollary_factor(params: OperatorParams) -> Fraction:
    """|beta|^2 / k! (d and dbar cases) or |alpha|^2 / (k!)^2."""
    case, coef, _ = _corollary_case(params)
    kf = factorial(params.k)
    return coef * coef / (kf * kf if case == "ddbar" else kf)


@dataclass(frozen=True)
class ScaledSolveReport:
    params: OperatorParams
    weight: WeightSpec
    case: str
    standard: SolveReport
    u: ZPoly
    norm_u_sq: PiRational
    norm_f_sq: PiRational
    bound: Fraction
    sharp_bound: Fraction

    @property
    def ratio_exact(self) -> Fraction:
        den = self.bound * self.norm_f_sq.real
        return Fraction(0) if den == 0 else self.norm_u_sq.real / den

    @property
    def ratio(self) -> float:
        return float(self.ratio_exact)

    @property
    def sharp_ratio(self) -> float:
        den = self.sharp_bound * self.norm_f_sq.real
        return 0.0 if den == 0 else float(self.norm_u_sq.real / den)

    @property
    def bound_holds(self) -> bool:
        return self.ratio <= 1 + 1e-6

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": SCALED_SCHEMA,
            "schema_version": 1,
            "params": self.params.to_dict(),
            "weight": self.weight.to_dict(),
            "case": self.case,
            "u": zpoly_to_json(self.u),
            "norm_u_sq": self.norm_u_sq.to_json(),
            "norm_f_sq": self.norm_f_sq.to_json(),
            "bound": format_rational(self.bound),
            "sharp_bound": format_rational(self.sharp_bound),
            "ratio": self.ratio,
            "sharp_ratio": self.sharp_ratio,
            "bound_holds": self.bound_holds,
            "standard_frame": self.standard.to_json(),
        }

    def sweep_row(self) -> Dict[str, Any]:
        return {
            "case": self.case,
            "lambda": format_rational(self.weight.lam),
            "z0_re": format_rational(self.weight.z0.re),
            "z0_im": format_rational(self.weight.z0.im),
            "k": self.params.k,
            "ratio": repr(self.ratio),
        }


def rescale_solve(
    f: ZPoly,
    params: OperatorParams,
    w: WeightSpec,
    trunc: TruncationSpec,
    *,
    workers: int = 1,
) -> ScaledSolveReport:
    """
    Solve H u = f in L^2(exp(-lambda |z - z0|^2)) through the standard Gaussian frame.

    The d case is solved as the conjugate dbar problem. Norms are exact in the
    original weight.
    """
    case, coef, order = _corollary_case(params)
    s = w.s
    scaled = OperatorParams(
        k=params.k,
        alpha=params.alpha,
        beta=params.beta,
        gamma=params.gamma,
        c=params.c / s**order,
    )
    g = to_standard_frame(f, w)
    if case == "d":
        mirrored = solve_min_norm(conj(g), conjugate_params(scaled), trunc, workers=workers)
        standard = mirrored
        v = conj(mirrored.u)
    else:
        standard = solve_min_norm(g, scaled, trunc, workers=workers)
        v = standard.u
    u = from_standard_frame(v, w).scale(1 / s**order)

    norm_u = norm_sq(translate(u, w.z0), scale=w.lam)
    norm_f = norm_sq(translate(f, w.z0), scale=w.lam)
    kf = factorial(params.k)
    lam_k = w.lam**params.k
    if case == "ddbar":
        bound = coef * coef / (lam_k * kf) ** 2
        sharp = 1 / (coef * coef * (lam_k * kf) ** 2)
    else:
        bound = coef * coef / (lam_k * kf)
        sharp = 1 / (coef * coef * lam_k * kf)
    rep = ScaledSolveReport(
        params=params,
        weight=w,
        case=case,
        standard=standard,
        u=u,
        norm_u_sq=norm_u,
        norm_f_sq=norm_f,
        bound=bound,
        sharp_bound=sharp,
    )
    log.info(
        "rescale_solve %s lambda=%s z0=%s: ratio=%.6g (sharp %.6g)",
        params,
        format_rational(w.lam),
        w.z0,
        rep.ratio,
        rep.sharp_ratio,
    )
    return rep


@dataclass(frozen=True)
class DomainReport:
    """
    int_U |u|^2 <= e^{|U|^2} factor int_U |f|^2 (asserted) and the displayed
    unsquared form ||u||_U <= e^{|U|^2} factor ||f||_U (reported).
    """

    params: OperatorParams
    domain: DomainSpec
    u: ZPoly
    kernel_dim: int
    norm_u_U: float
    norm_f_U: float
    weighted_u_U: float
    weighted_f_U: float
    factor: Fraction
    sharp_factor: Fraction
    quad_error: float

    @property
    def growth(self) -> float:
        return math.exp(float(self.domain.diameter) ** 2)

    @property
    def lhs(self) -> float:
        return self.norm_u_U

    @property
    def rhs(self) -> float:
        return self.growth * float(self.factor) * self.norm_f_U

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs + DISC_TOL * max(1.0, self.rhs)

    @property
    def displayed_holds(self) -> bool:
        return math.sqrt(self.lhs) <= self.growth * float(self.factor) * math.sqrt(self.norm_f_U) + DISC_TOL

    @property
    def chain_holds(self) -> bool:
        """e^{-|U|^2} int_U |u|^2 <= weighted U-norm <= sharp_factor * weighted int_U |f|^2."""
        first = self.lhs <= self.growth * self.weighted_u_U * (1 + DISC_TOL) + DISC_TOL
        second = self.weighted_u_U <= float(self.sharp_factor) * self.weighted_f_U * (1 + 1e-6) + DISC_TOL
        return first and second

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": DOMAIN_SCHEMA,
            "schema_version": 1,
            "params": self.params.to_dict(),
            "domain": self.domain.to_dict(),
            "u": zpoly_to_json(self.u),
            "kernel_dim": self.kernel_dim,
            "norm_u_U": self.norm_u_U,
            "norm_f_U": self.norm_f_U,
            "weighted_u_U": self.weighted_u_U,
            "weighted_f_U": self.weighted_f_U,
            "factor": format_rational(self.factor),
            "growth": self.growth,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "displayed_holds": self.displayed_holds,
            "chain_holds": self.chain_holds,
            "quad_error": self.quad_error,
        }

    def sweep_row(self) -> Dict[str, Any]:
        return {
            "case": self.params.case,
            "radius": format_rational(self.domain.radius),
            "factor": format_rational(self.factor),
            "lhs": repr(self.lhs),
            "rhs": repr(self.rhs),
        }


def polynomial_kernel(params: OperatorParams, degree: int) -> list[ZPoly]:
    """Basis of {h : H h = 0, h in V_degree} (empty when c != 0)."""
    mats = assemble(params, degree, 0, with_adjoint=False)
    vecs = nullspace(mats.exact_H(), ncols=len(mats.domain_basis))
    return [ZPoly({mn: c for mn, c in zip(mats.domain_basis, v) if c}) for v in vecs]


def _lower_on_disc(
    u0: ZPoly,
    kernel: list[ZPoly],
    dom: DomainSpec,
    grid: QuadratureGrid,
) -> ZPoly:
    """u0 + h minimizing int_U |u0 + h|^2 exp(-|z - z0|^2) over span(kernel); least squares on the grid."""
    if not kernel:
        return u0
    fine = grid.doubled()
    x, wx = legendre_rule(fine.radial_nodes)
    R = float(dom.radius)
    r = R * x
    deg = max([u0.degree] + [h.degree for h in kernel])
    theta, wth = angular_rule(max(fine.angular_nodes, 2 * deg + 2))
    c = complex(dom.center)
    Z = c + r[:, None] * np.exp(1j * theta)[None, :]
    W = (R * wx * r * wth)[:, None] * np.exp(-np.abs(Z - c) ** 2)
    z = Z.ravel()
    sw = np.sqrt(W.ravel())
    A = np.stack([sw * h.evaluate(z) for h in kernel], axis=1)
    b = -sw * u0.evaluate(z)
    a, *_ = np.linalg.lstsq(A, b, rcond=None)
    # dyadic rationals from the float coefficients keep H u = f exact
    return u0 + linear_combine(
        (GaussianRational(Fraction(float(ai.real)), Fraction(float(ai.imag))), h) for ai, h in zip(a, kernel)
    )


def solve_on_domain(
    f: ZPoly,
    params: OperatorParams,
    dom: DomainSpec,
    trunc: TruncationSpec,
    grid: QuadratureGrid = QuadratureGrid(),
    *,
    workers: int = 1,
) -> DomainReport:
    """
    Solve with the weight centered at dom.center, then lower the weighted U-norm
    with kernel elements of H of degree <= N + buffer.

    Raises QuadratureNotConverged when a disc integral misses DISC_TOL.
    """
    factor = corollary_factor(params)
    scaled = rescale_solve(f, params, WeightSpec(lam=1, z0=dom.center), trunc, workers=workers)
    kernel = polynomial_kernel(params, trunc.N + trunc.buffer)
    u = _lower_on_disc(scaled.u, kernel, dom, grid)

    nu = disc_norm_sq(u, dom, grid)
    nf = disc_norm_sq(f, dom, grid)
    wu = disc_norm_sq(u, dom, grid, weight_on=True)
    wf = disc_norm_sq(f, dom, grid, weight_on=True)
    rep = DomainReport(
        params=params,
        domain=dom,
        u=u,
        kernel_dim=len(kernel),
        norm_u_U=nu.real,
        norm_f_U=nf.real,
        weighted_u_U=wu.real,
        weighted_f_U=wf.real,
        factor=factor,
        sharp_factor=theorem_bound(params),
        quad_error=max(nu.error_estimate, nf.error_estimate, wu.error_estimate, wf.error_estimate),
    )
    log.info(
        "solve_on_domain %s radius=%s: lhs=%.6g rhs=%.6g holds=%s",
        params,
        format_rational(dom.radius),
        rep.lhs,
        rep.rhs,
        rep.holds,
    )
    return rep


def laplacian(p: ZPoly) -> ZPoly:
    """Lap = 4 d dbar."""
    return d_mixed(p, 1, 1).scale(4)


def weight_denominator(phi: ZPoly, case: str) -> ZPoly:
    """Lap(phi) for dbar_k1; Lap(e^phi Lap e^{-phi}) = Lap(4 (d phi dbar phi - d dbar phi)) for ddbar_k1."""
    if case == "dbar_k1":
        return laplacian(phi)
    if case == "ddbar_k1":
        inner_part = (d_z(phi) * d_zbar(phi) - d_mixed(phi, 1, 1)).scale(4)
        return laplacian(inner_part)
    raise ValidationError(f"{qpath('case')} must be one of {list(CASES)} (got {case!r})")


@dataclass(frozen=True)
class GeneralWeightBound:
    case: str
    norm_f_sq: float
    bound: float
    error_estimate: float

    def as_pair(self) -> tuple[float, float]:
        return self.norm_f_sq, self.bound

    @property
    def ratio(self) -> float:
        return safe_div(self.norm_f_sq, self.bound)

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": GENERAL_SCHEMA,
            "schema_version": 1,
            "case": self.case,
            "norm_f_sq": self.norm_f_sq,
            "bound": self.bound,
            "error_estimate": self.error_estimate,
        }


def general_weight_bound(
    f: ZPoly,
    w: WeightSpec,
    case: str,
    *,
    coefficient: Fraction | int = 1,
    grid: QuadratureGrid = QuadratureGrid(),
    tol: Optional[float] = 1e-8,
) -> GeneralWeightBound:
    """
    (||f||^2_phi, bound) for a radial polynomial weight; coefficient is beta (dbar_k1) or alpha (ddbar_k1).

    Raises PositivityViolated when the denominator is <= 0 at any quadrature node.
    """
    if w.radial is None:
        phi = ZPoly.monomial(1, 1, w.lam)
        if w.z0:
            raise ValidationError(f"{qpath('weight')} needs z0 = 0 or an explicit radial polynomial")
    else:
        phi = w.radial
    den = weight_denominator(phi, case)
    const = 4 if case == "dbar_k1" else 16
    coef = Fraction(coefficient)

    # phi as a function of t = |z|^2
    phi_t = np.polynomial.Polynomial([float(phi.coeff(j, j).re) for j in range(phi.max_m + 1)])
    a1 = float(phi.coeff(1, 1).re)
    if phi_t.trim().degree() >= 2:
        rule: Dict[str, Any] = {"t_max": radial_cutoff(phi_t)}
    elif a1 > 0:
        rule = {"kappa": a1}
    else:
        raise ValidationError(f"{qpath('weight')} radial polynomial must grow in |z|^2")

    def f_abs2(z: np.ndarray) -> np.ndarray:
        return np.abs(f.evaluate(z)) ** 2

    def bound_integrand(z: np.ndarray) -> np.ndarray:
        d = den.evaluate(z).real
        if np.any(d <= 0):
            raise PositivityViolated(f"{case} denominator is <= 0 (min {float(d.min()):.3e}) on the quadrature grid")
        return f_abs2(z) / d

    norm = integrate_radial_weight(f_abs2, phi_t, grid, tol=tol, **rule)
    bnd = integrate_radial_weight(bound_integrand, phi_t, grid, tol=tol, **rule)
    rep = GeneralWeightBound(
        case=case,
        norm_f_sq=norm.real,
        bound=const * float(coef * coef) * bnd.real,
        error_estimate=max(norm.error_estimate, bnd.error_estimate),
    )
    log.info("general weight %s: ||f||^2=%.6g bound=%.6g", case, rep.norm_f_sq, rep.bound)
    return rep
