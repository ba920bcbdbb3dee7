# helpers/fock/inner.py
# Closed-form weighted inner products <p, q> = int conj(p) q exp(-lambda |z|^2) dsigma on polynomials.

from __future__ import annotations

"""
helpers.fock.inner
------------------

Monomial rule (lambda = 1):

    <z^a zbar^b, z^c zbar^d> = pi * (a+d)!   if b + c == a + d, else 0

For the scaled weight exp(-lambda |z|^2) the value is pi * (a+d)! / lambda^(a+d+1).
The product is conjugate-linear in the first argument.
"""

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial

from helpers.zpoly import GaussianRational, ZPoly

from .pi_rational import PiRational


@lru_cache(maxsize=4096)
def monomial_inner(a: int, b: int, c: int, d: int) -> int:
    """<z^a zbar^b, z^c zbar^d> / pi for the standard weight."""
    if b + c != a + d:
        return 0
    return factorial(a + d)


def _by_charge(p: ZPoly) -> dict[int, list[tuple[int, int, GaussianRational]]]:
    out: dict[int, list[tuple[int, int, GaussianRational]]] = defaultdict(list)
    for (m, n), c in p.terms.items():
        out[m - n].append((m, n, c))
    return out


def inner(p: ZPoly, q: ZPoly, *, scale: Fraction | int = 1) -> PiRational:
    """
    Exact <p, q> for the weight exp(-scale * |z|^2).

    Only equal charges m - n pair up, so terms are bucketed by charge first.
    """
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError(f"scale must be > 0 (got {scale})")
    qb = _by_charge(q)
    re = Fraction(0)
    im = Fraction(0)
    for (a, b), cp in p.terms.items():
        bucket = qb.get(a - b)
        if not bucket:
            continue
        ca = cp.conj()
        for c, d, cq in bucket:
            s = a + d
            w: Fraction | int = factorial(s)
            if scale != 1:
                w = Fraction(w) / scale ** (s + 1)
            v = ca * cq
            re += v.re * w
            im += v.im * w
    return PiRational(GaussianRational(re, im))


def norm_sq(p: ZPoly, *, scale: Fraction | int = 1) -> PiRational:
    """<p, p>; real and >= 0."""
    return inner(p, p, scale=scale)
