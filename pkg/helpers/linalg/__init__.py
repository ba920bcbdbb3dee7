# helpers/linalg/__init__.py
"""helpers.linalg

Exact dense linear algebra over Gaussian rationals.
"""

from .exact import (
    LDLFactor,
    Matrix,
    NotPositiveDefinite,
    Vector,
    backward_unit_h,
    congruence_to_float,
    conj_transpose,
    forward_unit,
    identity,
    is_zero_matrix,
    ldl_hermitian,
    matmul,
    matvec,
    nullspace,
    row_echelon_solve,
    to_numpy,
    zeros,
)

__all__ = [
    "Matrix",
    "Vector",
    "LDLFactor",
    "NotPositiveDefinite",
    "zeros",
    "identity",
    "conj_transpose",
    "matmul",
    "matvec",
    "is_zero_matrix",
    "to_numpy",
    "ldl_hermitian",
    "forward_unit",
    "backward_unit_h",
    "row_echelon_solve",
    "nullspace",
    "congruence_to_float",
]
