# tests/scripts/wl2cert/test_runner.py
# End-to-end CLI runs through main(argv): exit codes, artifacts, determinism.

from __future__ import annotations

import json
from pathlib import Path

import pytest

from helpers.zpoly import ZPoly, zpoly_from_json, zpoly_to_json
from scripts.wl2cert import runner
from scripts.wl2cert.runner import EXIT_FAILED, EXIT_INVALID, EXIT_NUMERICAL, EXIT_OK, main


def _write_f(tmp_path: Path, p: ZPoly) -> str:
    path = tmp_path / "f.json"
    path.write_text(json.dumps(zpoly_to_json(p)), encoding="utf-8")
    return str(path)


def test_verify_small_suite_passes(tmp_path: Path) -> None:
    out = tmp_path / "verify.json"
    code = main(["verify", "--k", "2", "--seed", "7", "--count", "3", "--degree", "3", "--out", str(out)])
    assert code == EXIT_OK
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["schema"] == "identity_report"
    assert doc["ks"] == [2]
    assert doc["failed"] == 0 and doc["passed"] is True
    assert all(d["holds"] for d in doc["duality"])


def test_solve_writes_the_minimum_norm_solution(tmp_path: Path) -> None:
    out = tmp_path / "u.json"
    f = _write_f(tmp_path, ZPoly.const(1))
    assert main(["solve", "--k", "1", "--alpha", "1", "--f", f, "--out", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert zpoly_from_json(doc["u"]) == ZPoly.monomial(1, 1) - 1
    assert doc["ratio"] == 1.0


def test_solve_csv_on_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["solve", "--k", "1", "--alpha", "0", "--beta", "1", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,alpha,beta,gamma,c_re,c_im,N,buffer,ratio,residual"
    assert lines[1] == "1,0,1,0,0,0,0,1,1.0,0.0"


def test_solve_scaled_and_on_a_disc(tmp_path: Path) -> None:
    scaled = tmp_path / "scaled.json"
    assert main(["solve", "--k", "1", "--lambda", "2", "--out", str(scaled)]) == EXIT_OK
    assert json.loads(scaled.read_text(encoding="utf-8"))["schema"] == "scaled_solve_report"
    disc = tmp_path / "disc.json"
    assert main(["solve", "--k", "1", "--radius", "1", "--out", str(disc)]) == EXIT_OK
    doc = json.loads(disc.read_text(encoding="utf-8"))
    assert doc["schema"] == "domain_report" and doc["holds"] is True


def test_certify_single_term(tmp_path: Path) -> None:
    out = tmp_path / "cert.json"
    assert main(["certify", "--k", "1", "--alpha", "1", "--N", "3", "--out", str(out)]) == EXIT_OK
    entry = json.loads(out.read_text(encoding="utf-8"))["entries"][0]
    assert entry["coercivity"] >= 1 - 1e-9
    assert entry["right_inverse"]["norm_sq"] <= 1 + 1e-6


def test_sweep_small_grid(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        json.dumps(
            {
                "sweep": {
                    "ks": [1],
                    "families": [["1", "0", "0"], ["0", "1", "1"]],
                    "cs": [{"re": "0", "im": "0"}],
                    "lambdas": ["2"],
                    "f_degree": 2,
                }
            }
        ),
        encoding="utf-8",
    )
    assert main(["sweep", "--config", str(cfg), "--seed", "1", "--table", "scaling", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "case,lambda,z0_re,z0_im,k,ratio"
    assert len(lines) == 2


def test_sweep_scaling_includes_nonzero_constant(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        json.dumps(
            {
                "sweep": {
                    "ks": [1],
                    "families": [["1", "0", "0"]],
                    "cs": [{"re": "0", "im": "0"}, {"re": "0", "im": "1"}],
                    "lambdas": ["2"],
                    "f_degree": 2,
                }
            }
        ),
        encoding="utf-8",
    )
    assert main(["sweep", "--config", str(cfg), "--seed", "1", "--table", "scaling", "--format", "csv"]) == EXIT_OK
    rows = capsys.readouterr().out.splitlines()[1:]
    assert len(rows) == 2
    assert all(float(r.split(",")[-1]) <= 1 + 1e-10 for r in rows)


def test_oracle_small(tmp_path: Path) -> None:
    out = tmp_path / "oracle.json"
    assert main(["oracle", "--max-degree", "4", "--pairs", "1", "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8"))["passed"] is True


def test_runs_are_byte_identical(tmp_path: Path) -> None:
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--k", "1", "--seed", "11", "--count", "3", "--degree", "2"]
    assert main(argv + ["--out", str(a)]) == EXIT_OK
    assert main(argv + ["--threads", "3", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--alpha", "x"],
        ["solve", "--radius", "-1"],
        ["solve", "--f", "/nonexistent/f.json"],
        ["solve", "--N", "-1"],
        ["oracle", "--radial-nodes", "2"],
    ],
)
def test_invalid_input_exits_2(argv, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(argv) == EXIT_INVALID
    assert capsys.readouterr().err.startswith("ERROR:")


def test_no_solution_exits_3(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["solve", "--k", "1", "--alpha", "1", "--buffer", "0"]) == EXIT_NUMERICAL
    assert "increase --buffer" in capsys.readouterr().err


def test_failed_assertion_exits_1(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setattr(runner.reports, "solve_passed", lambda rep: False)
    assert main(["solve", "--k", "1"]) == EXIT_FAILED
    assert "FAILED" in capsys.readouterr().err
