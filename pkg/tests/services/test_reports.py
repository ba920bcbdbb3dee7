# tests/services/test_reports.py
# Artifact documents and CSV tables.

from __future__ import annotations

import json

import pytest

from helpers.operators import OperatorParams
from helpers.zpoly import ZPoly
from services.identity_lab import check_norm_sums, cross_terms
from services.reports import (
    CERTIFY_HEADER,
    CROSS_HEADER,
    certify_csv,
    certify_document,
    certify_entry,
    cross_rows,
    envelope,
    identity_document,
    render,
    solve_csv,
    solve_passed,
    sweep_csv,
    sweep_document,
)
from services.solver import RightInverseReport, TruncationSpec, solve_min_norm

DDBAR = OperatorParams(k=1, alpha=1, beta=0, gamma=0)
MIXED = OperatorParams(k=1, alpha=1, beta=1, gamma=0)


def _inverse(params: OperatorParams, norm_sq: float) -> RightInverseReport:
    return RightInverseReport(
        params=params, N=2, buffer=1, columns=(), norm_sq=norm_sq, identity_error=0.0, bound=1
    )


def test_envelope_rejects_collisions() -> None:
    assert envelope("x", {"a": 1}) == {"schema": "x", "schema_version": 1, "a": 1}
    with pytest.raises(ValueError):
        envelope("x", {"schema": "y"})


def test_identity_document_counts() -> None:
    reps = check_norm_sums(1, ZPoly.z()) + cross_terms(1, ZPoly.z())
    doc = identity_document(reps, ks=[1], seed=0, count=1, degree=1)
    assert doc["checked"] == len([r for r in reps if r.asserted])
    assert doc["failed"] == 0
    assert doc["passed"] is True
    json.dumps(doc)


def test_certify_entry_logic() -> None:
    ok = certify_entry(DDBAR, 4, 1.0, _inverse(DDBAR, 0.99))
    assert ok["asserted"] and ok["passed"]
    low = certify_entry(DDBAR, 4, 0.5, _inverse(DDBAR, 0.99))
    assert not low["coercivity_holds"] and not low["passed"]
    mixed = certify_entry(MIXED, 4, 0.1, _inverse(MIXED, 5.0))
    assert not mixed["asserted"] and mixed["passed"]
    doc = certify_document([ok, low])
    assert doc["passed"] is False
    lines = certify_csv([ok]).splitlines()
    assert lines[0] == ",".join(CERTIFY_HEADER)
    assert lines[1].startswith("1,1,0,0,4,")


def test_solve_csv_and_passed() -> None:
    rep = solve_min_norm(ZPoly.const(1), DDBAR, TruncationSpec(N=0, buffer=1))
    assert solve_passed(rep)
    assert solve_csv(rep).splitlines()[1] == "1,1,0,0,0,0,0,1,1.0,0.0"


def test_cross_rows_and_sweep_tables() -> None:
    rows = cross_rows(cross_terms(2, ZPoly.monomial(2, 1)))
    assert [r["l"] for r in rows] == [1, 2]
    assert set(rows[0]) == set(CROSS_HEADER)
    doc = sweep_document([], [], cross_terms(1, ZPoly.z()), [], seed=4)
    assert doc["passed"] is True
    assert sweep_csv(doc, "cross_terms").splitlines()[0] == ",".join(CROSS_HEADER)
    with pytest.raises(ValueError):
        sweep_csv(doc, "nope")


def test_render_formats() -> None:
    doc = envelope("x", {"b": 1, "a": 2})
    assert render(doc, None, "json").endswith("\n")
    assert render(doc, "a\n", "csv") == "a\n"
    with pytest.raises(ValueError):
        render(doc, None, "csv")
    with pytest.raises(ValueError):
        render(doc, None, "yaml")
