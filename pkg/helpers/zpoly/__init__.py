# helpers/zpoly/__init__.py
"""helpers.zpoly

Exact bivariate (z, zbar) polynomial algebra over Gaussian rationals.
"""

from .scalar import I, ONE, ZERO, GaussianRational, format_rational, gr
from .poly import ZPoly, grlex_key, linear_combine, mul_monomial
from .calculus import (
    conj,
    d_mixed,
    d_z,
    d_zbar,
    dilate,
    gauss_derivative,
    monomials_up_to,
    random_zpoly,
    translate,
)
from .serde import dump_gaussian, load_gaussian, zpoly_from_json, zpoly_to_json

__all__ = [
    # scalar
    "GaussianRational",
    "gr",
    "ZERO",
    "ONE",
    "I",
    "format_rational",
    # poly
    "ZPoly",
    "grlex_key",
    "linear_combine",
    "mul_monomial",
    # calculus
    "d_z",
    "d_zbar",
    "d_mixed",
    "gauss_derivative",
    "conj",
    "translate",
    "dilate",
    "monomials_up_to",
    "random_zpoly",
    # serde
    "zpoly_to_json",
    "zpoly_from_json",
    "dump_gaussian",
    "load_gaussian",
]
