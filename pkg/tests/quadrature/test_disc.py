# tests/quadrature/test_disc.py
# Tests for disc quadrature and DomainSpec.

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from helpers.quadrature import DomainSpec, disc_norm_sq, integrate_disc
from helpers.validation import ValidationError
from helpers.zpoly import ZPoly, gr

UNIT = DomainSpec(center=gr(0), radius=Fraction(1))


def test_domain_spec() -> None:
    dom = DomainSpec.from_dict({"center": {"re": "1/2"}, "radius": "3/2"})
    assert dom.diameter == 3
    assert DomainSpec.from_dict(dom.to_dict()) == dom
    with pytest.raises(ValidationError):
        DomainSpec.from_dict({"radius": "-1"})


@pytest.mark.parametrize(
    "p, expected",
    [
        (ZPoly.const(1), math.pi),
        (ZPoly.zero(), 0.0),
        (ZPoly.monomial(1, 1), math.pi / 2),
    ],
)
def test_unit_disc_examples(p: ZPoly, expected: float) -> None:
    assert abs(integrate_disc(p, UNIT).value - expected) <= 1e-10


def test_weight_on_and_off_center() -> None:
    # int_{|z|<1} e^{-|z|^2} = pi (1 - 1/e)
    res = integrate_disc(ZPoly.const(1), UNIT, weight_on=True)
    assert abs(res.value - math.pi * (1 - math.exp(-1))) < 1e-10
    shifted = DomainSpec(center=gr(2, 1), radius=Fraction(1))
    assert abs(integrate_disc(ZPoly.const(1), shifted).value - math.pi) < 1e-10


def test_shrinking_the_disc_cannot_increase_the_norm() -> None:
    f = ZPoly.monomial(2, 1) - ZPoly.zbar() + 3
    prev = math.inf
    for r in (Fraction(2), Fraction(1), Fraction(1, 2), Fraction(1, 4)):
        v = disc_norm_sq(f, DomainSpec(center=gr(0), radius=r)).real
        assert v <= prev + 1e-10
        prev = v
