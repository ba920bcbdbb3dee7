# helpers/zpoly/calculus.py
# Wirtinger derivatives, Gaussian-derivative polynomials and affine changes of variable on ZPoly.

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from helpers.math import binom, falling

from .poly import Exp, ZPoly
from .scalar import GaussianRational, Number, gr


def d_z(p: ZPoly, i: int = 1) -> ZPoly:
    """i-th Wirtinger derivative in z: z^m zbar^n -> m!/(m-i)! z^(m-i) zbar^n."""
    if i < 0:
        raise ValueError(f"derivative order must be >= 0 (got {i})")
    if i == 0:
        return p
    out: dict[Exp, GaussianRational] = {}
    for (m, n), c in p.terms.items():
        if m >= i:
            out[(m - i, n)] = c * falling(m, i)
    return ZPoly._wrap(out)


def d_zbar(p: ZPoly, j: int = 1) -> ZPoly:
    """j-th Wirtinger derivative in zbar (mirror of d_z)."""
    if j < 0:
        raise ValueError(f"derivative order must be >= 0 (got {j})")
    if j == 0:
        return p
    out: dict[Exp, GaussianRational] = {}
    for (m, n), c in p.terms.items():
        if n >= j:
            out[(m, n - j)] = c * falling(n, j)
    return ZPoly._wrap(out)


def d_mixed(p: ZPoly, i: int, j: int) -> ZPoly:
    """d_z^i d_zbar^j p (the two commute on polynomials)."""
    return d_z(d_zbar(p, j), i)


@lru_cache(maxsize=512)
def gauss_derivative(i: int, j: int) -> ZPoly:
    """
    P_{i,j} with d_z^i d_zbar^j exp(-|z|^2) = P_{i,j} exp(-|z|^2).

    Closed form:
      P_{i,j} = sum_{n=max(0,i-j)}^{i} (-1)^(n+j) C(i,n) j!/(j-i+n)! z^(j-i+n) zbar^n
    """
    if i < 0 or j < 0:
        raise ValueError(f"gauss_derivative needs i, j >= 0 (got {i}, {j})")
    out: dict[Exp, GaussianRational] = {}
    for n in range(max(0, i - j), i + 1):
        e = j - i + n
        c = (-1) ** (n + j) * binom(i, n) * falling(j, j - e)
        if c:
            out[(e, n)] = gr(c)
    return ZPoly._wrap(out)


def conj(p: ZPoly) -> ZPoly:
    """Complex conjugation of a polynomial function."""
    return p.conj()


def translate(p: ZPoly, z0: Number) -> ZPoly:
    """Return q with q(z) = p(z + z0), exact."""
    a = GaussianRational.coerce(z0)
    if not a:
        return p
    ab = a.conj()
    a_pows = [gr(1)]
    ab_pows = [gr(1)]
    for _ in range(max(p.max_m, p.max_n, 0)):
        a_pows.append(a_pows[-1] * a)
        ab_pows.append(ab_pows[-1] * ab)
    acc: dict[Exp, GaussianRational] = {}
    for (m, n), c in p.terms.items():
        for r in range(m + 1):
            cr = c * binom(m, r) * a_pows[m - r]
            for s in range(n + 1):
                t = cr * binom(n, s) * ab_pows[n - s]
                key = (r, s)
                prev = acc.get(key)
                acc[key] = t if prev is None else prev + t
    return ZPoly._wrap({mn: c for mn, c in acc.items() if c})


def dilate(p: ZPoly, s: Fraction | int) -> ZPoly:
    """Return q with q(z) = p(s z) for real rational s != 0."""
    s = Fraction(s)
    if s == 0:
        raise ValueError("dilate needs s != 0")
    return ZPoly._wrap({(m, n): c * s ** (m + n) for (m, n), c in p.terms.items()})


def monomials_up_to(degree: int) -> list[Exp]:
    """All (m, n) with m + n <= degree in graded lexicographic order."""
    return [(m, d - m) for d in range(degree + 1) for m in range(d + 1)]


def random_zpoly(
    rng: np.random.Generator,
    degree: int,
    *,
    n_terms: int = 6,
    coeff_range: int = 3,
    support: Sequence[Exp] | None = None,
) -> ZPoly:
    """
    Random polynomial with small Gaussian-integer coefficients.

    Exponents are drawn from `support` (default: total degree <= degree).
    Deterministic for a seeded Generator.
    """
    pool = list(support) if support is not None else monomials_up_to(degree)
    if not pool:
        return ZPoly.zero()
    count = min(n_terms, len(pool))
    idx = rng.choice(len(pool), size=count, replace=False)
    terms: dict[Exp, GaussianRational] = {}
    for k in sorted(int(x) for x in idx):
        re = int(rng.integers(-coeff_range, coeff_range + 1))
        im = int(rng.integers(-coeff_range, coeff_range + 1))
        terms[pool[k]] = gr(re, im)
    return ZPoly(terms)
