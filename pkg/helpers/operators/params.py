# helpers/operators/params.py
# OperatorParams: (k, alpha, beta, gamma, c) for H = alpha d^k dbar^k + beta dbar^k + gamma d^k + c.

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Optional

from helpers.validation import (
    ValidationError,
    ensure_dict,
    ensure_int,
    ensure_rational,
    path_join,
    qpath,
)
from helpers.zpoly import GaussianRational, dump_gaussian, format_rational, load_gaussian


def _load_c(v: Any, *, path: str) -> GaussianRational:
    """c is either a rational scalar or {"re": ..., "im": ...}."""
    if v is None:
        return GaussianRational(0)
    if isinstance(v, dict):
        return load_gaussian(v, path=path)
    return GaussianRational(ensure_rational(v, path=path))


@dataclass(frozen=True)
class OperatorParams:
    k: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    c: GaussianRational = GaussianRational(0)

    def __post_init__(self) -> None:
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValidationError(f"{qpath('params.k')} must be an int >= 1 (got {self.k!r})")
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not isinstance(v, Fraction):
                object.__setattr__(self, name, Fraction(v))
        if not isinstance(self.c, GaussianRational):
            object.__setattr__(self, "c", GaussianRational.coerce(self.c))
        if self.alpha == 0 and self.beta == 0 and self.gamma == 0:
            raise ValidationError("(alpha, beta, gamma) must not all be zero")

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "params") -> "OperatorParams":
        obj = ensure_dict(d, path=path)
        k = ensure_int(obj.get("k"), path=path_join(path, "k"), min_v=1)
        alpha = ensure_rational(obj.get("alpha", 0), path=path_join(path, "alpha"))
        beta = ensure_rational(obj.get("beta", 0), path=path_join(path, "beta"))
        gamma = ensure_rational(obj.get("gamma", 0), path=path_join(path, "gamma"))
        c = _load_c(obj.get("c"), path=path_join(path, "c"))
        if alpha == 0 and beta == 0 and gamma == 0:
            raise ValidationError(f"{qpath(path)}: (alpha, beta, gamma) must not all be zero")
        return OperatorParams(k=k, alpha=alpha, beta=beta, gamma=gamma, c=c)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "gamma": format_rational(self.gamma),
            "c": dump_gaussian(self.c),
        }

    @property
    def case(self) -> Optional[str]:
        """
        Single-term case name, or None for mixed parameters.

        "ddbar": beta == gamma == 0, "dbar": alpha == gamma == 0, "d": alpha == beta == 0.
        """
        if self.beta == 0 and self.gamma == 0:
            return "ddbar"
        if self.alpha == 0 and self.gamma == 0:
            return "dbar"
        if self.alpha == 0 and self.beta == 0:
            return "d"
        return None

    @property
    def couples_charges(self) -> bool:
        """beta or gamma shifts charge by k; alpha and c preserve it."""
        return self.beta != 0 or self.gamma != 0

    def __str__(self) -> str:
        return (
            f"k={self.k} alpha={format_rational(self.alpha)} beta={format_rational(self.beta)} "
            f"gamma={format_rational(self.gamma)} c={self.c}"
        )


def proof_coercivity(params: OperatorParams) -> Fraction:
    """alpha^2 (k!)^2 + beta^2 k! + gamma^2 k!"""
    kf = factorial(params.k)
    return params.alpha**2 * kf * kf + params.beta**2 * kf + params.gamma**2 * kf


def theorem_bound(params: OperatorParams) -> Fraction:
    """Norm bound ||u||^2 <= theorem_bound * ||f||^2, i.e. 1 / proof_coercivity."""
    return 1 / proof_coercivity(params)


def conjugate_params(params: OperatorParams) -> OperatorParams:
    """
    Parameters of the conjugated problem: beta and gamma swap, c is conjugated.

    conj(H_params(p)) == H_conjugate_params(conj(p)) for every polynomial p.
    """
    return OperatorParams(
        k=params.k,
        alpha=params.alpha,
        beta=params.gamma,
        gamma=params.beta,
        c=params.c.conj(),
    )
