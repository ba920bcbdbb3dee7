# tests/scripts/wl2cert/test_config.py

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from helpers.validation import ValidationError
from scripts.wl2cert.config import (
    RunConfig,
    SweepConfig,
    default_config_path,
    load_default_config,
    load_run_config,
    merge_config,
)


def test_default_config_ships_and_parses() -> None:
    assert default_config_path().is_file()
    cfg = load_default_config()
    assert cfg.params.k == 1
    assert cfg.params.alpha == 1
    assert cfg.N is None and cfg.buffer is None
    assert cfg.suite.ks == (1, 2, 3)
    assert len(cfg.sweep.families) == 7
    assert cfg.sweep.lambdas == (Fraction(1, 2), Fraction(1), Fraction(2))
    assert not cfg.scaled
    assert cfg.truncation(3).buffer == 1


def test_merge_config_nests_dicts_and_replaces_lists() -> None:
    base = {"a": {"x": 1, "y": [1, 2]}, "b": 1}
    out = merge_config(base, {"a": {"y": [3]}, "c": 2})
    assert out == {"a": {"x": 1, "y": [3]}, "b": 1, "c": 2}
    assert base["a"]["y"] == [1, 2]


def test_config_file_then_overrides(tmp_path: Path) -> None:
    p = tmp_path / "run.json"
    p.write_text(json.dumps({"params": {"k": 2, "beta": "1", "alpha": "0"}, "seed": 9}), encoding="utf-8")
    cfg = load_run_config({"seed": 3, "weight": {"lambda": "4"}}, config_path=p)
    assert cfg.params.k == 2
    assert cfg.params.case == "dbar"
    assert cfg.seed == 3
    assert cfg.scaled
    assert cfg.truncation(1).buffer == 2


def test_unreadable_config_file(tmp_path: Path) -> None:
    p = tmp_path / "broken.json"
    p.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_run_config({}, config_path=p)


@pytest.mark.parametrize(
    "override",
    [
        {"format": "yaml"},
        {"seed": -1},
        {"trunc": {"N": -2}},
        {"grid": {"radial_nodes": 2}},
        {"suite": {"ks": []}},
        {"params": {"alpha": "0"}},
        {"threads": 0},
        {"domain": {"radius": "0"}},
    ],
)
def test_invalid_overrides_are_rejected(override) -> None:
    with pytest.raises(ValidationError):
        load_run_config(override)


def test_sweep_families_validation() -> None:
    assert SweepConfig.from_dict({"families": [["1", "0", "0"]]}).families == ((1, 0, 0),)
    with pytest.raises(ValidationError):
        SweepConfig.from_dict({"families": [["1", "0"]]})
    with pytest.raises(ValidationError):
        SweepConfig.from_dict({"families": [[0, 0, 0]]})
    with pytest.raises(ValidationError):
        SweepConfig.from_dict({"lambdas": ["-1"]})


def test_run_config_needs_params() -> None:
    with pytest.raises(ValidationError):
        RunConfig.from_dict({})
