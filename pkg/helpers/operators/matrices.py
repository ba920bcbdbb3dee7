# helpers/operators/matrices.py
# Sparse matrices of H and H* over truncated monomial bases, tagged with truncation metadata.

from __future__ import annotations

"""
helpers.operators.matrices
--------------------------

Bases:
- test space  V_N = span{z^m zbar^n : m, n <= N}
- search space W  = V_{N+buffer}

H maps W into W (no degree growth). H* maps V_N into W when buffer >= k.
Column order of every matrix is graded lexicographic.

Adjointness in the weighted metric:

    G_W * Hstar == H^H * G_{W,N}

where G_{W,N} is the Gram matrix with rows in W and columns in V_N.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from scipy import sparse

from helpers.errors import BufferTooSmall
from helpers.fock import GramBlock, gram, gram_solve, inner, truncated_basis
from helpers.fs import atomic_write_text
from helpers.linalg import Matrix
from helpers.threading import ordered_map
from helpers.validation import ValidationError, qpath
from helpers.zpoly import GaussianRational, ZPoly

from .adjoint import apply_H, apply_H_star
from .params import OperatorParams

log = logging.getLogger(__name__)

Exp = tuple[int, int]


def _images_to_sparse(
    images: Sequence[ZPoly],
    row_index: dict[Exp, int],
    n_rows: int,
) -> sparse.csc_matrix:
    rows: list[int] = []
    cols: list[int] = []
    vals: list[complex] = []
    for col, img in enumerate(images):
        for mn, c in img.items():
            rows.append(row_index[mn])
            cols.append(col)
            vals.append(complex(c))
    return sparse.coo_matrix(
        (np.array(vals, dtype=np.complex128), (rows, cols)),
        shape=(n_rows, len(images)),
    ).tocsc()


def images_to_exact(images: Sequence[ZPoly], row_basis: Sequence[Exp]) -> Matrix:
    """Exact coefficient matrix, column j = coefficients of images[j] in row_basis."""
    zero = GaussianRational(0)
    out: Matrix = [[zero] * len(images) for _ in row_basis]
    index = {mn: i for i, mn in enumerate(row_basis)}
    for j, img in enumerate(images):
        for mn, c in img.items():
            out[index[mn]][j] = c
    return out


@dataclass(frozen=True)
class WeightedOperatorMatrices:
    """
    H and H* on finite sections.

    H_matrix:     rows/cols in domain_basis (W)
    Hstar_matrix: rows in domain_basis (W), cols in test_basis (V_N); empty when
                  assembled without the adjoint
    gram_domain:  Gram blocks of W; gram_codomain: Gram blocks of V_N
    """

    params: OperatorParams
    N: int
    buffer: int
    domain_basis: tuple[Exp, ...]
    test_basis: tuple[Exp, ...]
    H_images: tuple[ZPoly, ...]
    Hstar_images: tuple[ZPoly, ...]
    H_matrix: sparse.csc_matrix
    Hstar_matrix: Optional[sparse.csc_matrix]
    gram_domain: tuple[GramBlock, ...]
    gram_codomain: tuple[GramBlock, ...]

    @property
    def has_adjoint(self) -> bool:
        return self.Hstar_matrix is not None

    def exact_H(self) -> Matrix:
        return images_to_exact(self.H_images, self.domain_basis)

    def exact_Hstar(self) -> Matrix:
        if not self.has_adjoint:
            raise ValueError("matrices were assembled without the adjoint")
        return images_to_exact(self.Hstar_images, self.domain_basis)

    def max_column_nnz(self) -> int:
        nnz = np.diff(self.H_matrix.indptr)
        return int(nnz.max()) if nnz.size else 0

    def exact_adjointness(self) -> bool:
        """<H e_r, e_c> == <e_r, H* e_c> for every r in W, c in V_N (exact)."""
        if not self.has_adjoint:
            raise ValueError("matrices were assembled without the adjoint")
        test = [ZPoly.monomial(m, n) for (m, n) in self.test_basis]
        for r, (m, n) in enumerate(self.domain_basis):
            er = ZPoly.monomial(m, n)
            for c, ec in enumerate(test):
                if inner(self.H_images[r], ec) != inner(er, self.Hstar_images[c]):
                    return False
        return True

    def adjointness_error(self) -> float:
        """
        max |G_W^{-1} H^H G_{W,N} - Hstar| in float.

        G_W^{-1} is applied through the exact block LDL^H factor, so only the
        final comparison runs in floating point.
        """
        if not self.has_adjoint:
            raise ValueError("matrices were assembled without the adjoint")
        worst = 0.0
        for c, (m, n) in enumerate(self.test_basis):
            ec = ZPoly.monomial(m, n)
            rhs = [inner(self.H_images[r], ec).coeff for r in range(len(self.domain_basis))]
            x = gram_solve(self.domain_basis, rhs)
            col = self.Hstar_matrix[:, c].toarray().ravel()
            diff = np.abs(np.array([complex(v) for v in x], dtype=np.complex128) - col)
            if diff.size:
                worst = max(worst, float(diff.max()))
        return worst

    def write_coo(self, path: str | Path, *, which: str = "H") -> None:
        """Coordinate text form: one 'row col re im' line per stored entry."""
        if which == "H":
            mat = self.H_matrix
        elif which == "Hstar":
            if self.Hstar_matrix is None:
                raise ValueError("matrices were assembled without the adjoint")
            mat = self.Hstar_matrix
        else:
            raise ValueError(f"which must be 'H' or 'Hstar' (got {which!r})")
        coo = mat.tocoo()
        order = np.lexsort((coo.row, coo.col))
        lines = [f"# {which} shape={mat.shape[0]}x{mat.shape[1]} N={self.N} buffer={self.buffer}"]
        for t in order:
            v = complex(coo.data[t])
            lines.append(f"{int(coo.row[t])} {int(coo.col[t])} {v.real!r} {v.imag!r}")
        atomic_write_text(path, "\n".join(lines) + "\n")


def assemble(
    params: OperatorParams,
    N: int,
    buffer: int,
    *,
    with_adjoint: bool = True,
    workers: int = 1,
) -> WeightedOperatorMatrices:
    """
    Build H on W = V_{N+buffer} and (optionally) H* on V_N.

    Raises BufferTooSmall when H* of a test monomial leaves W, which happens
    exactly when buffer < k.
    """
    if N < 0:
        raise ValidationError(f"{qpath('N')} must be >= 0 (got {N})")
    if buffer < 0:
        raise ValidationError(f"{qpath('buffer')} must be >= 0 (got {buffer})")
    top = N + buffer
    domain_basis = tuple(truncated_basis(top))
    test_basis = tuple(truncated_basis(N))
    index = {mn: i for i, mn in enumerate(domain_basis)}

    H_images = tuple(
        ordered_map(lambda mn: apply_H(params, ZPoly.monomial(*mn)), domain_basis, workers=workers)
    )

    Hstar_images: tuple[ZPoly, ...] = ()
    Hstar_matrix = None
    if with_adjoint:
        Hstar_images = tuple(
            ordered_map(lambda mn: apply_H_star(params, ZPoly.monomial(*mn)), test_basis, workers=workers)
        )
        for mn, img in zip(test_basis, Hstar_images):
            if img.max_m > top or img.max_n > top:
                raise BufferTooSmall(
                    f"{qpath('buffer')} = {buffer} is too small for k={params.k}: "
                    f"H* z^{mn[0]} zbar^{mn[1]} reaches degree ({img.max_m}, {img.max_n}) > {top}"
                )
        Hstar_matrix = _images_to_sparse(Hstar_images, index, len(domain_basis))

    H_matrix = _images_to_sparse(H_images, index, len(domain_basis))
    log.debug(
        "assemble %s N=%d buffer=%d: |W|=%d |V_N|=%d nnz(H)=%d",
        params,
        N,
        buffer,
        len(domain_basis),
        len(test_basis),
        H_matrix.nnz,
    )
    return WeightedOperatorMatrices(
        params=params,
        N=N,
        buffer=buffer,
        domain_basis=domain_basis,
        test_basis=test_basis,
        H_images=H_images,
        Hstar_images=Hstar_images,
        H_matrix=H_matrix,
        Hstar_matrix=Hstar_matrix,
        gram_domain=tuple(gram(top)),
        gram_codomain=tuple(gram(N)),
    )
