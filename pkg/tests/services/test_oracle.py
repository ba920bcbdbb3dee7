# tests/services/test_oracle.py
# Quadrature cross-validation against closed forms and weak residuals.

from __future__ import annotations

import numpy as np

from helpers.operators import apply_H
from helpers.quadrature import integrate_gaussian
from helpers.zpoly import ZPoly
from services.oracle import (
    CLOSED_FORM_TOL,
    CSV_HEADER,
    OracleCheck,
    closed_form_tolerance,
    disc_checks,
    inner_product_checks,
    monomial_checks,
    run_oracle,
    weak_checks,
    weak_pairs,
)


def test_monomials_match_closed_form_up_to_32() -> None:
    checks = monomial_checks(32)
    assert len(checks) == 33 * 34 // 2
    failed = [c.label for c in checks if not c.passed]
    assert failed == []


def test_off_charge_tolerance_rejects_perturbed_values() -> None:
    q = integrate_gaussian(ZPoly.monomial(32, 0))
    tol = closed_form_tolerance(0j, q.magnitude)
    assert q.magnitude > 1e13
    assert tol < 1e-12 * q.magnitude
    assert OracleCheck("gaussian_monomial", "z^32", q.value, 0j, tol).passed
    assert not OracleCheck("gaussian_monomial", "z^32", q.value + 1e-9 * q.magnitude, 0j, tol).passed


def test_on_charge_tolerance_is_relative_to_the_closed_form() -> None:
    q = integrate_gaussian(ZPoly.monomial(16, 16))
    exact = abs(q.value)
    tol = closed_form_tolerance(exact, q.magnitude)
    assert CLOSED_FORM_TOL * exact <= tol <= 1.01 * CLOSED_FORM_TOL * exact
    assert closed_form_tolerance(0.5, 0.0) == CLOSED_FORM_TOL


def test_inner_products_and_discs() -> None:
    assert all(c.passed for c in inner_product_checks(np.random.default_rng(5), count=5))
    assert all(c.passed for c in disc_checks())


def test_weak_pairs_are_classical_solutions() -> None:
    pairs = weak_pairs(np.random.default_rng(1), count=6, degree=3)
    assert {p.params.k for p in pairs} == {1, 2}
    for p in pairs:
        assert apply_H(p.params, p.u) == p.f
    assert all(c.passed for c in weak_checks(pairs[:3]))


def test_check_row_formatting() -> None:
    c = OracleCheck("disc", "x", 1 + 0j, 1 + 0j, 1e-10)
    row = c.row()
    assert tuple(row) == CSV_HEADER
    assert row["value"] == "1.0" and row["passed"] == "true"
    assert OracleCheck("disc", "y", 1j, 0j, 0.5).passed is False


def test_run_oracle_is_seeded() -> None:
    a = run_oracle(seed=3, max_degree=6, pairs=2)
    b = run_oracle(seed=3, max_degree=6, pairs=2, workers=4)
    assert a.passed
    assert a.to_json() == b.to_json()
    assert a.to_json()["schema"] == "oracle_report"
