# services/reports.py
# Artifact documents (schema envelope + body) and CSV tables for the CLI commands.

from __future__ import annotations

import logging
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence

from helpers.fs import csv_text, dumps_artifact
from helpers.operators import OperatorParams, proof_coercivity

from .identity_lab import SUMMARY_HEADER, DualityReport, IdentityReport, summary_csv
from .oracle import CSV_HEADER as ORACLE_HEADER
from .oracle import OracleReport
from .solver import SWEEP_HEADER, RightInverseReport, SolveReport
from .transforms import DOMAIN_HEADER, SCALING_HEADER, DomainReport, GeneralWeightBound, ScaledSolveReport

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CERTIFY_HEADER = ("k", "alpha", "beta", "gamma", "N", "coercivity", "proof_coercivity", "norm_T_sq", "bound")
CROSS_HEADER = ("k", "beta", "gamma", "l", "combination", "gamma_pairing", "beta_pairing")
GENERAL_HEADER = ("case", "lambda", "norm_f_sq", "bound")

COERCIVITY_SLACK = 1e-9


def envelope(schema: str, body: Mapping[str, Any]) -> Dict[str, Any]:
    """schema + schema_version followed by body; body may not redefine either envelope key."""
    doc: Dict[str, Any] = {"schema": schema, "schema_version": SCHEMA_VERSION}
    for key, v in body.items():
        if key in doc:
            raise ValueError(f"body key {key!r} collides with the artifact envelope")
        doc[key] = v
    return doc


def identity_document(
    reports: Sequence[IdentityReport],
    *,
    ks: Sequence[int],
    seed: int,
    count: int,
    degree: int,
    duality: Sequence[DualityReport] = (),
) -> Dict[str, Any]:
    asserted = [r for r in reports if r.asserted]
    failed = [r for r in asserted if not r.passed]
    duality_ok = all(d.holds for d in duality)
    return envelope(
        "identity_report",
        {
            "ks": list(ks),
            "seed": seed,
            "count": count,
            "degree": degree,
            "checked": len(asserted),
            "failed": len(failed),
            "passed": not failed and duality_ok,
            "reports": [r.to_json() for r in reports],
            "duality": [d.to_json() for d in duality],
        },
    )


def identity_csv(reports: Sequence[IdentityReport]) -> str:
    return summary_csv(reports)


def solve_document(rep: SolveReport | ScaledSolveReport | DomainReport) -> Dict[str, Any]:
    """Each report already carries its own envelope."""
    return rep.to_json()


def solve_csv(rep: SolveReport | ScaledSolveReport | DomainReport) -> str:
    if isinstance(rep, SolveReport):
        return csv_text(SWEEP_HEADER, [rep.sweep_row()])
    if isinstance(rep, ScaledSolveReport):
        return csv_text(SCALING_HEADER, [rep.sweep_row()])
    return csv_text(DOMAIN_HEADER, [rep.sweep_row()])


def solve_passed(rep: SolveReport | ScaledSolveReport | DomainReport) -> bool:
    """Asserted bound checks for the exit status; mixed parameters are report-only."""
    if isinstance(rep, SolveReport):
        return rep.residual_sq.is_zero() and (not rep.bound_asserted or rep.bound_holds)
    if isinstance(rep, ScaledSolveReport):
        return rep.bound_holds
    return rep.holds


def coercivity_asserted(params: OperatorParams) -> bool:
    return params.case is not None


def certify_entry(
    params: OperatorParams,
    N: int,
    coercivity: float,
    inverse: RightInverseReport,
) -> Dict[str, Any]:
    proof = proof_coercivity(params)
    asserted = coercivity_asserted(params)
    coercivity_ok = coercivity >= float(proof) - COERCIVITY_SLACK
    inverse_ok = inverse.bound_holds and inverse.identity_error <= 1e-9
    return {
        "params": params.to_dict(),
        "N": N,
        "coercivity": coercivity,
        "proof_coercivity": float(proof),
        "coercivity_holds": coercivity_ok,
        "right_inverse": inverse.to_json(),
        "asserted": asserted,
        "passed": (not asserted) or (coercivity_ok and inverse_ok),
    }


def certify_document(entries: Sequence[Dict[str, Any]]) -> Dict[str, Any]:
    return envelope(
        "certify_report",
        {"entries": list(entries), "passed": all(e["passed"] for e in entries)},
    )


def certify_csv(entries: Sequence[Dict[str, Any]]) -> str:
    rows = []
    for e in entries:
        p = e["params"]
        rows.append(
            {
                "k": p["k"],
                "alpha": p["alpha"],
                "beta": p["beta"],
                "gamma": p["gamma"],
                "N": e["N"],
                "coercivity": repr(e["coercivity"]),
                "proof_coercivity": repr(e["proof_coercivity"]),
                "norm_T_sq": repr(e["right_inverse"]["norm_sq"]),
                "bound": e["right_inverse"]["bound"],
            }
        )
    return csv_text(CERTIFY_HEADER, rows)


def cross_rows(reports: Iterable[IdentityReport]) -> list[Dict[str, Any]]:
    rows = []
    for r in reports:
        if r.identity_id != "HYP":
            continue
        ex = r.to_json()["extras"]
        rows.append(
            {
                "k": r.k,
                "beta": ex["beta"],
                "gamma": ex["gamma"],
                "l": ex["l"],
                "combination": r.lhs.to_json()["pi_rational"],
                "gamma_pairing": ex["gamma_pairing"]["pi_rational"],
                "beta_pairing": ex["beta_pairing"]["pi_rational"],
            }
        )
    return rows


def sweep_document(
    solves: Sequence[SolveReport],
    scaled: Sequence[ScaledSolveReport],
    cross: Sequence[IdentityReport],
    general: Sequence[tuple[str, GeneralWeightBound]],
    *,
    seed: int,
) -> Dict[str, Any]:
    asserted = [s for s in solves if s.bound_asserted] + list(scaled)
    return envelope(
        "sweep_report",
        {
            "seed": seed,
            "solve": [s.sweep_row() for s in solves],
            "scaling": [s.sweep_row() for s in scaled],
            "cross_terms": cross_rows(cross),
            "general_weight": [
                {"case": g.case, "lambda": lam, "norm_f_sq": repr(g.norm_f_sq), "bound": repr(g.bound)}
                for lam, g in general
            ],
            "passed": all(s.bound_holds for s in asserted),
        },
    )


def sweep_csv(doc: Mapping[str, Any], table: str = "solve") -> str:
    headers = {
        "solve": SWEEP_HEADER,
        "scaling": SCALING_HEADER,
        "cross_terms": CROSS_HEADER,
        "general_weight": GENERAL_HEADER,
    }
    if table not in headers:
        raise ValueError(f"unknown sweep table {table!r}")
    return csv_text(headers[table], doc[table])


def oracle_document(rep: OracleReport) -> Dict[str, Any]:
    return rep.to_json()


def oracle_csv(rep: OracleReport) -> str:
    return csv_text(ORACLE_HEADER, rep.rows())


def render(doc: Mapping[str, Any], csv: Optional[str], fmt: str) -> str:
    """Artifact text for --format json|csv."""
    if fmt == "json":
        return dumps_artifact(doc)
    if fmt == "csv":
        if csv is None:
            raise ValueError("this command has no CSV form")
        return csv
    raise ValueError(f"format must be 'json' or 'csv' (got {fmt!r})")


__all__ = [
    "SUMMARY_HEADER",
    "CERTIFY_HEADER",
    "CROSS_HEADER",
    "GENERAL_HEADER",
    "envelope",
    "identity_document",
    "identity_csv",
    "solve_document",
    "solve_csv",
    "solve_passed",
    "certify_entry",
    "certify_document",
    "certify_csv",
    "cross_rows",
    "sweep_document",
    "sweep_csv",
    "oracle_document",
    "oracle_csv",
    "render",
]
