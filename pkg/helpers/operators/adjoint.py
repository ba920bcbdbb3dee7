# helpers/operators/adjoint.py
# Weighted conjugation e^{|z|^2} D (p e^{-|z|^2}), the operator H and its weighted formal adjoint H*.

from __future__ import annotations

"""
helpers.operators.adjoint
-------------------------

Gaussian weight phi = |z|^2. Single-letter conjugations:

    e^phi d    (p e^-phi) = (d    - M_zbar) p
    e^phi dbar (p e^-phi) = (dbar - M_z)    p

Ladder form of the adjoints:

    d*    = M_z    - dbar      (so d*^k    = (-1)^k e^phi d^k    e^-phi)
    dbar* = M_zbar - d         (so dbar*^k = (-1)^k e^phi dbar^k e^-phi)
    R = d^k dbar^k,  R* = e^phi d^k dbar^k (. e^-phi)

H* uses conj(c) for the zeroth-order term, which keeps <H p, q> = <p, H* q>
exact for complex c.
"""

from typing import Iterable, Sequence

from helpers.zpoly import ZPoly, d_mixed, d_z, d_zbar, mul_monomial

from .params import OperatorParams

D = "d"
DBAR = "dbar"
LETTERS = (D, DBAR)


def _check_word(word: Iterable[str]) -> list[str]:
    out = list(word)
    for i, letter in enumerate(out):
        if letter not in LETTERS:
            raise ValueError(f"word[{i}] must be one of {list(LETTERS)} (got {letter!r})")
    return out


def word(i: int, j: int) -> list[str]:
    """The word d^i dbar^j."""
    return [D] * i + [DBAR] * j


def conj_step(letter: str, p: ZPoly) -> ZPoly:
    """One weighted-conjugation step for a single letter."""
    if letter == D:
        return d_z(p) - mul_monomial(p, 0, 1)
    if letter == DBAR:
        return d_zbar(p) - mul_monomial(p, 1, 0)
    raise ValueError(f"letter must be one of {list(LETTERS)} (got {letter!r})")


def weighted_conjugate(word_: Sequence[str], p: ZPoly) -> ZPoly:
    """
    e^{|z|^2} D (p e^{-|z|^2}) for the operator word D = word_[0] word_[1] ... .

    Letters act right to left; the single-letter steps commute, so order does
    not change the result.
    """
    out = p
    for letter in reversed(_check_word(word_)):
        out = conj_step(letter, out)
    return out


def d_star(p: ZPoly, k: int = 1) -> ZPoly:
    """(M_z - dbar)^k p."""
    out = p
    for _ in range(k):
        out = mul_monomial(out, 1, 0) - d_zbar(out)
    return out


def dbar_star(p: ZPoly, k: int = 1) -> ZPoly:
    """(M_zbar - d)^k p."""
    out = p
    for _ in range(k):
        out = mul_monomial(out, 0, 1) - d_z(out)
    return out


def apply_R(p: ZPoly, k: int) -> ZPoly:
    return d_mixed(p, k, k)


def apply_R_star(p: ZPoly, k: int) -> ZPoly:
    return dbar_star(d_star(p, k), k)


def apply_H(params: OperatorParams, p: ZPoly) -> ZPoly:
    """alpha d^k dbar^k p + beta dbar^k p + gamma d^k p + c p."""
    k = params.k
    out = p.scale(params.c)
    if params.alpha:
        out = out + apply_R(p, k).scale(params.alpha)
    if params.beta:
        out = out + d_zbar(p, k).scale(params.beta)
    if params.gamma:
        out = out + d_z(p, k).scale(params.gamma)
    return out


def apply_H_star(params: OperatorParams, p: ZPoly) -> ZPoly:
    """alpha R* p + beta dbar*^k p + gamma d*^k p + conj(c) p."""
    k = params.k
    out = p.scale(params.c.conj())
    if params.alpha:
        out = out + apply_R_star(p, k).scale(params.alpha)
    if params.beta:
        out = out + dbar_star(p, k).scale(params.beta)
    if params.gamma:
        out = out + d_star(p, k).scale(params.gamma)
    return out
