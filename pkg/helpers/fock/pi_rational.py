# helpers/fock/pi_rational.py
# PiRational: exact value coeff * pi, the unit every Gaussian inner product carries.

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Union

from helpers.zpoly import GaussianRational, format_rational

Scalar = Union[int, Fraction, GaussianRational]


@dataclass(frozen=True)
class PiRational:
    """coeff * pi with an exact Gaussian-rational coefficient; pi stays symbolic."""

    coeff: GaussianRational

    @staticmethod
    def of(c: Scalar) -> "PiRational":
        return PiRational(GaussianRational.coerce(c))

    @staticmethod
    def zero() -> "PiRational":
        return PiRational(GaussianRational(0))

    def __add__(self, other: "PiRational") -> "PiRational":
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.coeff + other.coeff)

    def __sub__(self, other: "PiRational") -> "PiRational":
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.coeff - other.coeff)

    def __neg__(self) -> "PiRational":
        return PiRational(-self.coeff)

    def __mul__(self, c: Scalar) -> "PiRational":
        if isinstance(c, PiRational):
            # pi * pi would leave the unit system
            return NotImplemented
        try:
            g = GaussianRational.coerce(c)
        except TypeError:
            return NotImplemented
        return PiRational(self.coeff * g)

    __rmul__ = __mul__

    def conj(self) -> "PiRational":
        return PiRational(self.coeff.conj())

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    @property
    def real(self) -> Fraction:
        """Real part of the coefficient (value / pi)."""
        return self.coeff.re

    def to_complex(self) -> complex:
        return complex(self.coeff) * math.pi

    def to_float(self) -> float:
        """Real part as a float (norms are real)."""
        return float(self.coeff.re) * math.pi

    def to_json(self) -> Dict[str, object]:
        """{"pi_rational": "p/q", "pi_rational_im": "p/q", "float": x}"""
        out: Dict[str, object] = {
            "pi_rational": format_rational(self.coeff.re),
            "float": self.to_float(),
        }
        if self.coeff.im:
            out["pi_rational_im"] = format_rational(self.coeff.im)
            out["float_im"] = float(self.coeff.im) * math.pi
        return out

    def __str__(self) -> str:
        if self.coeff.is_zero():
            return "0"
        return f"{self.coeff}*pi"
