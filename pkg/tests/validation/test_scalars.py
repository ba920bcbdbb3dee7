# tests/validation/test_scalars.py
# Tests for helpers.validation scalar validators (ensure_*).

from __future__ import annotations

from fractions import Fraction

import pytest

from helpers.validation import (
    ValidationError,
    ensure_dict,
    ensure_int,
    ensure_int_list,
    ensure_list,
    ensure_one_of,
    ensure_rational,
    ensure_str,
    qpath,
)


def test_ensure_str_strips_and_rejects_empty() -> None:
    """ensure_str should strip whitespace and reject empty strings by default."""
    assert ensure_str("  a  ", path="p") == "a"
    assert ensure_str("  ", path="p", allow_empty=True) == ""
    with pytest.raises(ValidationError):
        ensure_str("   ", path="p")


def test_ensure_int_rejects_bool_and_bounds() -> None:
    """ensure_int should reject bool and enforce min/max when provided."""
    with pytest.raises(ValidationError):
        ensure_int(True, path="x")  # type: ignore[arg-type]
    assert ensure_int(5, path="x", min_v=1, max_v=10) == 5
    with pytest.raises(ValidationError):
        ensure_int(0, path="x", min_v=1)
    with pytest.raises(ValidationError):
        ensure_int(11, path="x", max_v=10)


@pytest.mark.parametrize(
    "raw, expected",
    [
        (3, Fraction(3)),
        ("3/2", Fraction(3, 2)),
        (" -1/4 ", Fraction(-1, 4)),
        ("0.25", Fraction(1, 4)),
        (0.1, Fraction(1, 10)),
        (Fraction(2, 3), Fraction(2, 3)),
    ],
)
def test_ensure_rational_accepts(raw, expected: Fraction) -> None:
    assert ensure_rational(raw, path="r") == expected


@pytest.mark.parametrize("raw", [True, "x", "1/0", "1e3", float("nan"), None, [1]])
def test_ensure_rational_rejects(raw) -> None:
    with pytest.raises(ValidationError):
        ensure_rational(raw, path="r")


def test_ensure_rational_sign_constraints() -> None:
    with pytest.raises(ValidationError):
        ensure_rational("0", path="lambda", positive=True)
    with pytest.raises(ValidationError):
        ensure_rational("-1", path="r", min_v=Fraction(0))


def test_container_and_choice_validators() -> None:
    assert ensure_dict({}, path="d") == {}
    assert ensure_list([], path="l") == []
    with pytest.raises(ValidationError):
        ensure_dict([], path="d")
    with pytest.raises(ValidationError):
        ensure_list({}, path="l")
    assert ensure_one_of("csv", ("json", "csv"), path="format") == "csv"
    with pytest.raises(ValidationError):
        ensure_one_of("xml", ("json", "csv"), path="format")


def test_ensure_int_list_increasing() -> None:
    assert ensure_int_list([1, 2, 5], path="ks", strictly_increasing=True) == [1, 2, 5]
    with pytest.raises(ValidationError, match="strictly increasing"):
        ensure_int_list([1, 1], path="ks", strictly_increasing=True)
    with pytest.raises(ValidationError, match=r"'ks\[1\]'"):
        ensure_int_list([1, "2"], path="ks")


def test_qpath_quotes() -> None:
    assert qpath("params.k") == "'params.k'"
    assert qpath("") == "'value'"
