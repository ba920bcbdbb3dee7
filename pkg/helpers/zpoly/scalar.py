# helpers/zpoly/scalar.py
# GaussianRational: exact complex scalar with Fraction real/imaginary parts.

from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """
    Exact complex number re + i*im with re, im in Q.

    Immutable: there are no setters, every operation returns a new value.
    Fractions keep denominators reduced and positive.
    """

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> None:
        _RE.__set__(self, Fraction(re))
        _IM.__set__(self, Fraction(im))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GaussianRational is immutable")

    # -------------------------
    # Construction
    # -------------------------

    @staticmethod
    def coerce(x: Number) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, (int, Fraction)):
            return _make(Fraction(x), _ZERO)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    # -------------------------
    # Arithmetic
    # -------------------------

    def __add__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return _make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return _make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __neg__(self) -> "GaussianRational":
        return _make(-self.re, -self.im)

    def __mul__(self, other: Number) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return _make(a * c, _ZERO)
            return _make(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return _make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        den = o.abs2()
        if den == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        num = self * o.conj()
        return _make(num.re / den, num.im / den)

    def __rtruediv__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return GaussianRational.coerce(1) / (self ** (-n))
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return _make(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|x|^2, exact."""
        return self.re * self.re + self.im * self.im

    # -------------------------
    # Comparison / conversion
    # -------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self) -> str:
        if not self.im:
            return format_rational(self.re)
        if not self.re:
            return f"{format_rational(self.im)}i"
        sign = "-" if self.im < 0 else "+"
        return f"({format_rational(self.re)}{sign}{format_rational(abs(self.im))}i)"


_RE = GaussianRational.__dict__["re"]
_IM = GaussianRational.__dict__["im"]
_ZERO = Fraction(0)


def _make(re: Fraction, im: Fraction) -> GaussianRational:
    g = object.__new__(GaussianRational)
    _RE.__set__(g, re)
    _IM.__set__(g, im)
    return g


ZERO = _make(_ZERO, _ZERO)
ONE = _make(Fraction(1), _ZERO)
I = _make(_ZERO, Fraction(1))


def format_rational(x: Fraction) -> str:
    """Decimal-free string: 'p' for integers, 'p/q' otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def gr(re: int | Fraction | str = 0, im: int | Fraction | str = 0) -> GaussianRational:
    """Short constructor used throughout tests and services."""
    return GaussianRational(re, im)
