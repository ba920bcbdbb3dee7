# helpers/zpoly/poly.py
# ZPoly: canonical finite polynomial in (z, zbar) with GaussianRational coefficients.

from __future__ import annotations

"""
helpers.zpoly.poly
------------------

Bivariate polynomials sum c_{m,n} z^m zbar^n with exact coefficients.

Scope:
- canonical storage (no zero coefficients), exact equality
- ring operations (+, -, *, scalar scaling)
- conjugation z^m zbar^n -> zbar^m z^n with conjugated coefficients
- float evaluation on numpy grids (quadrature only)

Non-goals:
- transcendental coefficients
- factorization
- more than one complex variable
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

import numpy as np

from .scalar import ZERO, GaussianRational, Number

Exp = Tuple[int, int]


def grlex_key(mn: Exp) -> tuple[int, int]:
    """Graded lexicographic order on (m, n): total degree first, then m."""
    m, n = mn
    return (m + n, m)


class ZPoly:
    """
    Immutable polynomial in z, zbar.

    terms: exponent pair (m, n) -> coefficient; m is the degree in z, n in zbar.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exp, Number]] = None) -> None:
        clean: dict[Exp, GaussianRational] = {}
        if terms:
            for (m, n), c in terms.items():
                if m < 0 or n < 0:
                    raise ValueError(f"negative exponent ({m}, {n})")
                g = GaussianRational.coerce(c)
                if g:
                    clean[(int(m), int(n))] = g
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, clean: dict[Exp, GaussianRational]) -> "ZPoly":
        # clean must already be free of zeros
        p = object.__new__(cls)
        p._terms = clean
        p._hash = None
        return p

    # -------------------------
    # Constructors
    # -------------------------

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls._wrap({})

    @classmethod
    def const(cls, c: Number) -> "ZPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, m: int, n: int, c: Number = 1) -> "ZPoly":
        return cls({(m, n): c})

    @classmethod
    def z(cls) -> "ZPoly":
        return cls.monomial(1, 0)

    @classmethod
    def zbar(cls) -> "ZPoly":
        return cls.monomial(0, 1)

    # -------------------------
    # Accessors
    # -------------------------

    @property
    def terms(self) -> Mapping[Exp, GaussianRational]:
        return MappingProxyType(self._terms)

    def coeff(self, m: int, n: int) -> GaussianRational:
        return self._terms.get((m, n), ZERO)

    def items(self) -> Iterator[tuple[Exp, GaussianRational]]:
        """Terms in graded lexicographic order."""
        for mn in sorted(self._terms, key=grlex_key):
            yield mn, self._terms[mn]

    def __iter__(self) -> Iterator[Exp]:
        return iter(sorted(self._terms, key=grlex_key))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def max_m(self) -> int:
        """Largest z-degree; -1 for the zero polynomial."""
        return max((m for m, _ in self._terms), default=-1)

    @property
    def max_n(self) -> int:
        """Largest zbar-degree; -1 for the zero polynomial."""
        return max((n for _, n in self._terms), default=-1)

    @property
    def degree(self) -> int:
        """Total degree max(m + n); -1 for the zero polynomial."""
        return max((m + n for m, n in self._terms), default=-1)

    def charges(self) -> set[int]:
        return {m - n for m, n in self._terms}

    # -------------------------
    # Ring operations
    # -------------------------

    def __add__(self, other: Union["ZPoly", Number]) -> "ZPoly":
        if not isinstance(other, ZPoly):
            try:
                other = ZPoly.const(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for mn, c in other._terms.items():
            s = out.get(mn)
            if s is None:
                out[mn] = c
            else:
                s = s + c
                if s:
                    out[mn] = s
                else:
                    del out[mn]
        return ZPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "ZPoly":
        return ZPoly._wrap({mn: -c for mn, c in self._terms.items()})

    def __sub__(self, other: Union["ZPoly", Number]) -> "ZPoly":
        if not isinstance(other, ZPoly):
            try:
                other = ZPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "ZPoly":
        return ZPoly.const(other) - self

    def scale(self, c: Number) -> "ZPoly":
        g = GaussianRational.coerce(c)
        if not g:
            return ZPoly.zero()
        return ZPoly._wrap({mn: v * g for mn, v in self._terms.items()})

    def __mul__(self, other: Union["ZPoly", Number]) -> "ZPoly":
        if not isinstance(other, ZPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out: dict[Exp, GaussianRational] = {}
        for (m1, n1), c1 in self._terms.items():
            for (m2, n2), c2 in other._terms.items():
                key = (m1 + m2, n1 + n2)
                prod = c1 * c2
                s = out.get(key)
                out[key] = prod if s is None else s + prod
        return ZPoly._wrap({mn: c for mn, c in out.items() if c})

    def __rmul__(self, other: Number) -> "ZPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "ZPoly":
        if n < 0:
            raise ValueError("negative power of ZPoly")
        out = ZPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> "ZPoly":
        """Complex conjugate: c z^m zbar^n -> conj(c) z^n zbar^m."""
        return ZPoly._wrap({(n, m): c.conj() for (m, n), c in self._terms.items()})

    def truncate(self, N: int) -> "ZPoly":
        """Keep terms with m <= N and n <= N."""
        return ZPoly._wrap({(m, n): c for (m, n), c in self._terms.items() if m <= N and n <= N})

    def charge_part(self, q: int) -> "ZPoly":
        return ZPoly._wrap({(m, n): c for (m, n), c in self._terms.items() if m - n == q})

    # -------------------------
    # Equality / display
    # -------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)) and not isinstance(other, bool):
            return self._terms == ZPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"ZPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (m, n), c in self.items():
            mono = "*".join(
                x
                for x in (
                    "z" if m == 1 else f"z^{m}" if m else "",
                    "zbar" if n == 1 else f"zbar^{n}" if n else "",
                )
                if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -------------------------
    # Float evaluation
    # -------------------------

    def evaluate(self, z: np.ndarray | complex) -> np.ndarray:
        """Evaluate at complex points (float mode). Accepts scalars or arrays."""
        zz = np.asarray(z, dtype=np.complex128)
        out = np.zeros_like(zz)
        if not self._terms:
            return out
        zb = np.conj(zz)
        max_m = self.max_m
        max_n = self.max_n
        zp = [np.ones_like(zz)]
        for _ in range(max_m):
            zp.append(zp[-1] * zz)
        zbp = [np.ones_like(zz)]
        for _ in range(max_n):
            zbp.append(zbp[-1] * zb)
        for (m, n), c in self._terms.items():
            out = out + complex(c) * zp[m] * zbp[n]
        return out


def linear_combine(pairs: Iterable[tuple[Number, ZPoly]]) -> ZPoly:
    """Exact linear combination sum c_i * p_i in canonical form."""
    acc: dict[Exp, GaussianRational] = {}
    for c, p in pairs:
        g = GaussianRational.coerce(c)
        if not g:
            continue
        for mn, v in p._terms.items():
            t = v * g
            s = acc.get(mn)
            acc[mn] = t if s is None else s + t
    return ZPoly._wrap({mn: c for mn, c in acc.items() if c})


def mul_monomial(p: ZPoly, a: int, b: int) -> ZPoly:
    """Multiply by z^a zbar^b (exponent shift, coefficients unchanged)."""
    if a < 0 or b < 0:
        raise ValueError(f"mul_monomial needs a, b >= 0 (got {a}, {b})")
    return ZPoly._wrap({(m + a, n + b): c for (m, n), c in p._terms.items()})
