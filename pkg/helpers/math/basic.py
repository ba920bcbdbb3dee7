# helpers/math/basic.py
# Small exact numeric primitives (binomials, falling factorials, rational square roots, safe division).

from __future__ import annotations

"""
helpers.math.basic
------------------

Small exact helpers shared by the polynomial, operator and solver layers.

Scope:
- binomial coefficients and falling factorials as ints
- factorial quotients as Fractions
- rational square roots (exact when possible, truncated otherwise)
- safe division with a degenerate-ratio default

Non-goals:
- polynomial algebra (see helpers.zpoly)
- floating-point linear algebra (numpy/scipy at the call site)
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt

# Digits kept when sqrt of a non-square rational has to be truncated.
SQRT_DIGITS = 40


def binom(n: int, k: int) -> int:
    """C(n, k); 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def falling(n: int, r: int) -> int:
    """n!/(n-r)! for 0 <= r <= n, else 0."""
    if r < 0 or r > n:
        return 0
    out = 1
    for t in range(n - r + 1, n + 1):
        out *= t
    return out


def fact(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return factorial(n)


def safe_div(n: float, d: float, *, default: float = 0.0) -> float:
    """Divide n/d, returning default on division by zero (ratio 0/0 reads as 0)."""
    if d == 0:
        return default
    return n / d


def _sqrt_ge_one(x: Fraction) -> Fraction:
    p, q = x.numerator, x.denominator
    pq = p * q
    r = isqrt(pq)
    if r * r == pq:
        return Fraction(r, q)
    scale = 10**SQRT_DIGITS
    return Fraction(isqrt(pq * scale * scale), q * scale)


def rational_sqrt(x: Fraction) -> Fraction:
    """
    Square root of a positive rational.

    Exact when x is the square of a rational. Otherwise truncated to SQRT_DIGITS
    digits; the value for x < 1 is the reciprocal of the value for 1/x, so
    rational_sqrt(x) * rational_sqrt(1/x) == 1 holds exactly.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"rational_sqrt needs x > 0 (got {x})")
    if x >= 1:
        return _sqrt_ge_one(x)
    return 1 / _sqrt_ge_one(1 / x)


def is_rational_square(x: Fraction) -> bool:
    x = Fraction(x)
    if x < 0:
        return False
    p, q = x.numerator, x.denominator
    return isqrt(p) ** 2 == p and isqrt(q) ** 2 == q
