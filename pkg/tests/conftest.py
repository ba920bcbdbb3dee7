# tests/conftest.py
from __future__ import annotations

import os
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from helpers.zpoly import GaussianRational, ZPoly

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_configure(config) -> None:
    os.environ.setdefault("TZ", "UTC")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


small_int = st.integers(min_value=-3, max_value=3)

gaussian_rationals = st.builds(
    lambda a, b, d: GaussianRational(Fraction(a, d), Fraction(b, d)),
    small_int,
    small_int,
    st.sampled_from([1, 2, 3]),
)


def zpolys(max_degree: int = 3, max_terms: int = 4) -> st.SearchStrategy[ZPoly]:
    """Small exact polynomials with Gaussian-rational coefficients."""
    exps = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)).filter(
        lambda mn: mn[0] + mn[1] <= max_degree
    )
    return st.dictionaries(exps, gaussian_rationals, max_size=max_terms).map(ZPoly)
