# helpers/linalg/exact.py
# Dense exact linear algebra over GaussianRational: Hermitian LDL^H, row echelon solves, null spaces.

from __future__ import annotations

"""
helpers.linalg.exact
--------------------

Small dense kernels for exact matrices (lists of rows of GaussianRational).

Scope:
- LDL^H of Hermitian matrices with real pivots (unit lower L)
- forward/back substitution with the factor
- row echelon solve with free variables set to zero, inconsistency -> None
- null space basis
- congruence into orthonormal float coordinates for eigen problems

Non-goals:
- pivoting strategies for floats (floats only appear in to_numpy / congruence)
- sparse storage (blocks here are at most a few hundred rows)
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from helpers.zpoly import GaussianRational

Matrix = list[list[GaussianRational]]
Vector = list[GaussianRational]

_Z = GaussianRational(0)
_ONE = GaussianRational(1)


class NotPositiveDefinite(ArithmeticError):
    """An LDL^H pivot was <= 0."""

    def __init__(self, index: int, pivot: Fraction) -> None:
        super().__init__(f"pivot {index} is {pivot} (not > 0)")
        self.index = index
        self.pivot = pivot


def zeros(rows: int, cols: int) -> Matrix:
    return [[_Z] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = _ONE
    return out


def conj_transpose(A: Matrix) -> Matrix:
    if not A:
        return []
    return [[A[i][j].conj() for i in range(len(A))] for j in range(len(A[0]))]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return zeros(len(A), len(B[0]) if B else 0)
    n, m, p = len(A), len(B), len(B[0])
    out = zeros(n, p)
    for i in range(n):
        row = A[i]
        acc = [_Z] * p
        for t in range(m):
            a = row[t]
            if not a:
                continue
            bt = B[t]
            for j in range(p):
                b = bt[j]
                if b:
                    acc[j] = acc[j] + a * b
        out[i] = acc
    return out


def matvec(A: Matrix, x: Vector) -> Vector:
    out: Vector = []
    for row in A:
        acc = _Z
        for a, b in zip(row, x):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def is_zero_matrix(A: Matrix) -> bool:
    return all(not x for row in A for x in row)


def to_numpy(A: Matrix) -> np.ndarray:
    if not A:
        return np.zeros((0, 0), dtype=np.complex128)
    return np.array([[complex(x) for x in row] for row in A], dtype=np.complex128)


@dataclass(frozen=True)
class LDLFactor:
    """A = L diag(D) L^H with unit lower-triangular L and real D."""

    L: Matrix
    D: tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.D)

    def solve(self, b: Vector) -> Vector:
        """Solve A x = b."""
        y = forward_unit(self.L, b)
        y = [yi / d for yi, d in zip(y, self.D)]
        return backward_unit_h(self.L, y)


def ldl_hermitian(A: Matrix, *, require_positive: bool = True) -> LDLFactor:
    """
    Exact LDL^H without pivoting.

    Raises NotPositiveDefinite on the first pivot <= 0 when require_positive.
    """
    n = len(A)
    L = identity(n)
    D: list[Fraction] = []
    # lower triangle of W holds the running Schur complement
    W = [list(row) for row in A]
    for j in range(n):
        pivot = W[j][j]
        if pivot.im:
            raise ValueError(f"matrix is not Hermitian (imaginary diagonal at {j})")
        dj = pivot.re
        if dj == 0 or (require_positive and dj < 0):
            raise NotPositiveDefinite(j, dj)
        D.append(dj)
        col = [W[i][j] / dj for i in range(j + 1, n)]
        for off, i in enumerate(range(j + 1, n)):
            L[i][j] = col[off]
        for off_i, i in enumerate(range(j + 1, n)):
            lij = col[off_i]
            if not lij:
                continue
            s = lij * dj
            Wi = W[i]
            for off_k, k in enumerate(range(j + 1, i + 1)):
                lkj = col[off_k]
                if lkj:
                    Wi[k] = Wi[k] - s * lkj.conj()
    return LDLFactor(L=L, D=tuple(D))


def forward_unit(L: Matrix, b: Vector) -> Vector:
    """Solve L y = b for unit lower-triangular L."""
    y: Vector = []
    for i, bi in enumerate(b):
        acc = bi
        Li = L[i]
        for k in range(i):
            if Li[k] and y[k]:
                acc = acc - Li[k] * y[k]
        y.append(acc)
    return y


def backward_unit_h(L: Matrix, y: Vector) -> Vector:
    """Solve L^H x = y for unit lower-triangular L."""
    n = len(y)
    x: Vector = [_Z] * n
    for i in range(n - 1, -1, -1):
        acc = y[i]
        for k in range(i + 1, n):
            lki = L[k][i]
            if lki and x[k]:
                acc = acc - lki.conj() * x[k]
        x[i] = acc
    return x


def row_echelon_solve(A: Matrix, b: Vector) -> Optional[Vector]:
    """
    Solve A x = b exactly. Free variables are set to 0.

    Returns None when the system is inconsistent.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(r) for r in A]
    t = list(b)
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(cols):
        sel = next((r for r in range(piv_r, rows) if M[r][piv_c]), None)
        if sel is None:
            continue
        if sel != piv_r:
            M[piv_r], M[sel] = M[sel], M[piv_r]
            t[piv_r], t[sel] = t[sel], t[piv_r]
        fp = M[piv_r][piv_c]
        for r in range(piv_r + 1, rows):
            fr = M[r][piv_c]
            if not fr:
                continue
            frp = fr / fp
            Mr, Mp = M[r], M[piv_r]
            for c in range(piv_c, cols):
                if Mp[c]:
                    Mr[c] = Mr[c] - Mp[c] * frp
            t[r] = t[r] - t[piv_r] * frp
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == rows:
            break
    for r in range(piv_r, rows):
        if t[r]:
            return None
    x: Vector = [_Z] * cols
    for r in range(len(pivots) - 1, -1, -1):
        c0 = pivots[r]
        acc = t[r]
        Mr = M[r]
        for c in range(c0 + 1, cols):
            if Mr[c] and x[c]:
                acc = acc - Mr[c] * x[c]
        x[c0] = acc / Mr[c0]
    return x


def nullspace(A: Matrix, ncols: Optional[int] = None) -> list[Vector]:
    """Basis of {x : A x = 0} from the reduced row echelon form."""
    rows = len(A)
    cols = len(A[0]) if rows else (ncols or 0)
    M = [list(r) for r in A]
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(cols):
        if piv_r == rows:
            break
        sel = next((r for r in range(piv_r, rows) if M[r][piv_c]), None)
        if sel is None:
            continue
        M[piv_r], M[sel] = M[sel], M[piv_r]
        fp = M[piv_r][piv_c]
        M[piv_r] = [v / fp for v in M[piv_r]]
        for r in range(rows):
            if r == piv_r or not M[r][piv_c]:
                continue
            f = M[r][piv_c]
            M[r] = [vr - f * vp for vr, vp in zip(M[r], M[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    free = [c for c in range(cols) if c not in set(pivots)]
    basis: list[Vector] = []
    for fc in free:
        x: Vector = [_Z] * cols
        x[fc] = _ONE
        for r, pc in enumerate(pivots):
            x[pc] = -M[r][fc]
        basis.append(x)
    return basis


def congruence_to_float(M: Matrix, G: LDLFactor) -> np.ndarray:
    """
    Float matrix D^{-1/2} L^{-1} M L^{-H} D^{-1/2} for G = L D L^H.

    The transform to L-coordinates is exact; only the final diagonal scaling
    runs in floating point, so the ill-conditioning of G never reaches the floats.
    """
    n = len(M)
    if n == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    # X = L^{-1} M, column by column
    cols = [forward_unit(G.L, [M[i][j] for i in range(n)]) for j in range(n)]
    X = [[cols[j][i] for j in range(n)] for i in range(n)]
    # Y = X L^{-H} = (L^{-1} X^H)^H
    XH = conj_transpose(X)
    cols2 = [forward_unit(G.L, [XH[i][j] for i in range(n)]) for j in range(n)]
    Y = conj_transpose([[cols2[j][i] for j in range(n)] for i in range(n)])
    scale = [1.0 / math.sqrt(float(d)) for d in G.D]
    out = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            out[i, j] = complex(Y[i][j]) * scale[i] * scale[j]
    return out

