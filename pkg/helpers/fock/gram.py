# helpers/fock/gram.py
# Gram metric of the truncated monomial basis, one Hermitian block per charge q = m - n.

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from helpers.fs import atomic_write_csv
from helpers.linalg import LDLFactor, Matrix, Vector, ldl_hermitian
from helpers.zpoly import GaussianRational, format_rational, grlex_key

from .inner import monomial_inner
from .pi_rational import PiRational

log = logging.getLogger(__name__)

Exp = tuple[int, int]

GRAM_CSV_HEADER = ("q", "row_m", "row_n", "col_m", "col_n", "re_over_pi", "im_over_pi")


def truncated_basis(N: int) -> list[Exp]:
    """All (m, n) with m, n <= N in graded lexicographic order."""
    if N < 0:
        return []
    return sorted(((m, n) for m in range(N + 1) for n in range(N + 1)), key=grlex_key)


def gram_matrix(basis: Sequence[Exp]) -> Matrix:
    """Exact Gram matrix (units of pi) for an arbitrary list of monomials."""
    return [
        [GaussianRational(monomial_inner(a, b, c, d)) for (c, d) in basis]
        for (a, b) in basis
    ]


@dataclass(frozen=True)
class GramBlock:
    """
    Gram metric restricted to one charge.

    basis: exponent pairs with m - n == charge, ordered by m.
    entries: entries[r][c] = <z^a zbar^b, z^c zbar^d> for basis[r] = (a, b), basis[c] = (c, d).
    """

    charge: int
    basis: tuple[Exp, ...]
    entries: tuple[tuple[PiRational, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def exact(self) -> Matrix:
        """Coefficient matrix (value / pi)."""
        return [[e.coeff for e in row] for row in self.entries]

    def to_numpy(self) -> np.ndarray:
        """Float matrix in units of pi."""
        return np.array([[float(e.coeff.re) for e in row] for row in self.entries], dtype=np.float64)

    def factor(self) -> LDLFactor:
        """Exact LDL^H; raises NotPositiveDefinite if a pivot is <= 0."""
        return factor_basis(self.basis)

    def float_cholesky_ok(self) -> bool:
        """
        Float positivity check via scipy's Cholesky on the diagonally scaled block.

        The raw block spans many orders of magnitude ((a+d)! entries), so it is
        scaled by its diagonal first.
        """
        from scipy.linalg import LinAlgError, cholesky

        G = self.to_numpy()
        d = np.sqrt(np.diag(G))
        try:
            cholesky(G / np.outer(d, d), lower=True)
        except LinAlgError:
            return False
        return True

    def rows(self) -> Iterable[dict[str, object]]:
        for r, (rm, rn) in enumerate(self.basis):
            for c, (cm, cn) in enumerate(self.basis):
                v = self.entries[r][c].coeff
                yield {
                    "q": self.charge,
                    "row_m": rm,
                    "row_n": rn,
                    "col_m": cm,
                    "col_n": cn,
                    "re_over_pi": format_rational(v.re),
                    "im_over_pi": format_rational(v.im),
                }


@lru_cache(maxsize=256)
def factor_basis(basis: tuple[Exp, ...]) -> LDLFactor:
    """Exact LDL^H of the Gram matrix of a single-charge basis (cached by basis)."""
    return ldl_hermitian(gram_matrix(basis))


def split_by_charge(basis: Sequence[Exp]) -> dict[int, list[int]]:
    """Positions of each charge q = m - n inside basis, in basis order."""
    out: dict[int, list[int]] = {}
    for idx, (m, n) in enumerate(basis):
        out.setdefault(m - n, []).append(idx)
    return out


def gram_solve(basis: Sequence[Exp], b: Vector) -> Vector:
    """
    Solve G x = b exactly where G is the Gram matrix of basis.

    G is block diagonal by charge, so each block is factored and solved on its own.
    """
    if len(b) != len(basis):
        raise ValueError(f"rhs length {len(b)} does not match basis size {len(basis)}")
    x: Vector = [GaussianRational(0)] * len(basis)
    for idx in split_by_charge(basis).values():
        sub = tuple(basis[i] for i in idx)
        xs = factor_basis(sub).solve([b[i] for i in idx])
        for i, v in zip(idx, xs):
            x[i] = v
    return x


def charge_basis(N: int, q: int) -> tuple[Exp, ...]:
    lo = max(0, q)
    hi = min(N, N + q)
    return tuple((m, m - q) for m in range(lo, hi + 1))


def gram(N: int) -> list[GramBlock]:
    """Gram blocks for every charge q in [-N, N]; together they cover all m, n <= N."""
    if N < 0:
        raise ValueError(f"N must be >= 0 (got {N})")
    blocks: list[GramBlock] = []
    for q in range(-N, N + 1):
        basis = charge_basis(N, q)
        entries = tuple(
            tuple(PiRational.of(monomial_inner(a, b, c, d)) for (c, d) in basis)
            for (a, b) in basis
        )
        blocks.append(GramBlock(charge=q, basis=basis, entries=entries))
    log.debug("gram N=%d: %d blocks, sizes %s", N, len(blocks), [b.size for b in blocks])
    return blocks


def write_gram_csv(blocks: Sequence[GramBlock], path: str | Path) -> None:
    """CSV columns: q, row_m, row_n, col_m, col_n, re_over_pi, im_over_pi."""
    rows = [row for b in blocks for row in b.rows()]
    atomic_write_csv(path, GRAM_CSV_HEADER, rows)
