# tests/validation/test_mapping.py
# Tests for helpers.validation mapping readers (require_*).

from __future__ import annotations

from fractions import Fraction

import pytest

from helpers.validation import (
    ValidationError,
    path_join,
    require_dict,
    require_int,
    require_int_list,
    require_one_of,
    require_rational,
)


def test_path_join() -> None:
    assert path_join("params", "k") == "params.k"
    assert path_join("", "trunc") == "trunc"


def test_missing_required_key_names_the_path() -> None:
    """Missing required keys should raise ValidationError with the dotted path."""
    with pytest.raises(ValidationError, match="'params.k'"):
        require_int({}, "k", path="params")


def test_defaults_apply_only_when_missing() -> None:
    d = {"n": None}
    assert require_int({}, "k", default=1) == 1
    assert require_rational({}, "lambda", default=1) == 1
    with pytest.raises(ValidationError):
        require_int(d, "n", default=1)


def test_readers_validate_values() -> None:
    d = {"k": 2, "lambda": "9/4", "sub": {"a": 1}, "fmt": "csv", "ks": [1, 3]}
    assert require_int(d, "k", min_v=1) == 2
    assert require_rational(d, "lambda", positive=True) == Fraction(9, 4)
    assert require_dict(d, "sub") == {"a": 1}
    assert require_one_of(d, "fmt", ("json", "csv")) == "csv"
    assert require_int_list(d, "ks", strictly_increasing=True) == [1, 3]
    with pytest.raises(ValidationError, match="'cfg.sub'"):
        require_int(d, "sub", path="cfg")
