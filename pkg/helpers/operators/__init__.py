# helpers/operators/__init__.py
"""helpers.operators

H = alpha d^k dbar^k + beta dbar^k + gamma d^k + c on the Gaussian-weighted space,
its weighted formal adjoint H*, and sparse matrices on truncated bases.
"""

from .params import OperatorParams, conjugate_params, proof_coercivity, theorem_bound
from .adjoint import (
    D,
    DBAR,
    LETTERS,
    apply_H,
    apply_H_star,
    apply_R,
    apply_R_star,
    conj_step,
    d_star,
    dbar_star,
    weighted_conjugate,
    word,
)
from .matrices import WeightedOperatorMatrices, assemble, images_to_exact

__all__ = [
    # params
    "OperatorParams",
    "theorem_bound",
    "proof_coercivity",
    "conjugate_params",
    # adjoint
    "D",
    "DBAR",
    "LETTERS",
    "word",
    "conj_step",
    "weighted_conjugate",
    "d_star",
    "dbar_star",
    "apply_R",
    "apply_R_star",
    "apply_H",
    "apply_H_star",
    # matrices
    "WeightedOperatorMatrices",
    "assemble",
    "images_to_exact",
]
