# helpers/validation/scalars.py
# Scalar validators (value + path). These functions validate a provided value directly and do NOT read from mappings.

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Optional, Sequence

from .errors import ValidationError, qpath, type_name


def ensure_dict(v: Any, *, path: str = "value") -> dict:
    """Ensure v is a dict."""
    if not isinstance(v, dict):
        raise ValidationError(f"{qpath(path)} must be an object/dict (got {type_name(v)})")
    return v


def ensure_list(v: Any, *, path: str = "value") -> list:
    """Ensure v is a list."""
    if not isinstance(v, list):
        raise ValidationError(f"{qpath(path)} must be a list (got {type_name(v)})")
    return v


def ensure_str(v: Any, *, path: str = "value", allow_empty: bool = False) -> str:
    """
    Ensure v is a string.

    Notes:
      - Returns the stripped string.
      - allow_empty=False (default) rejects empty/whitespace-only strings.
    """
    if not isinstance(v, str):
        raise ValidationError(f"{qpath(path)} must be a string (got {type_name(v)})")
    s = v.strip()
    if not allow_empty and not s:
        raise ValidationError(f"{qpath(path)} must be a non-empty string")
    return s


def ensure_int(
    v: Any,
    *,
    path: str = "value",
    min_v: Optional[int] = None,
    max_v: Optional[int] = None,
) -> int:
    """
    Ensure v is an int within optional bounds.

    Note:
      bool is a subclass of int; we explicitly reject bool.
    """
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValidationError(f"{qpath(path)} must be an int (got {type_name(v)})")

    if min_v is not None and v < min_v:
        raise ValidationError(f"{qpath(path)} must be >= {min_v} (got {v})")
    if max_v is not None and v > max_v:
        raise ValidationError(f"{qpath(path)} must be <= {max_v} (got {v})")
    return v


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$|^[+-]?\d*\.\d+$|^[+-]?\d+\.\d*$")


def ensure_rational(
    v: Any,
    *,
    path: str = "value",
    min_v: Optional[Fraction] = None,
    positive: bool = False,
) -> Fraction:
    """
    Ensure v is an exact rational and return it as a Fraction.

    Accepted forms:
      - int (bool rejected)
      - Fraction
      - str "p", "p/q" or a plain decimal "0.25"
      - float, converted through its shortest repr ("0.1" -> 1/10)
    """
    if isinstance(v, bool):
        raise ValidationError(f"{qpath(path)} must be a rational (got bool)")
    if isinstance(v, Fraction):
        out = v
    elif isinstance(v, int):
        out = Fraction(v)
    elif isinstance(v, float):
        if v != v or v in (float("inf"), float("-inf")):
            raise ValidationError(f"{qpath(path)} must be finite (got {v})")
        out = Fraction(repr(v))
    elif isinstance(v, str):
        s = v.strip()
        if not _RATIONAL_RE.match(s):
            raise ValidationError(f"{qpath(path)} must look like 'p/q' (got {v!r})")
        try:
            out = Fraction(s)
        except ZeroDivisionError:
            raise ValidationError(f"{qpath(path)} has a zero denominator (got {v!r})") from None
    else:
        raise ValidationError(f"{qpath(path)} must be a rational (got {type_name(v)})")

    if positive and out <= 0:
        raise ValidationError(f"{qpath(path)} must be > 0 (got {out})")
    if min_v is not None and out < min_v:
        raise ValidationError(f"{qpath(path)} must be >= {min_v} (got {out})")
    return out


def ensure_one_of(value: Any, allowed: Sequence[Any], *, path: str = "value") -> Any:
    """Ensure value is in allowed."""
    if value not in allowed:
        raise ValidationError(f"{qpath(path)} must be one of {list(allowed)} (got {value!r})")
    return value


def ensure_int_list(
    v: Any,
    *,
    path: str = "value",
    min_v: Optional[int] = None,
    strictly_increasing: bool = False,
) -> list[int]:
    """Ensure v is a list of ints; optionally strictly increasing."""
    lst = ensure_list(v, path=path)
    out = [ensure_int(x, path=f"{path}[{i}]", min_v=min_v) for i, x in enumerate(lst)]
    if strictly_increasing:
        for i in range(1, len(out)):
            if out[i] <= out[i - 1]:
                raise ValidationError(
                    f"{qpath(path)} must be strictly increasing (got {out[i - 1]} then {out[i]} at index {i})"
                )
    return out
