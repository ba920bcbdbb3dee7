# helpers/validation/mapping.py
# Mapping readers (mapping + key + path). These functions read a field and validate it using scalar validators.

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

from .errors import ValidationError, qpath
from .scalars import (
    ensure_dict,
    ensure_int,
    ensure_int_list,
    ensure_one_of,
    ensure_rational,
)

# Sentinel used to distinguish:
#   "key not provided"  vs  "key provided with value None"
_MISSING = object()


def path_join(path: str, key: str) -> str:
    """
    Join a parent path and a key into a dotted path.

    Examples:
      path_join("params", "k") -> "params.k"
      path_join("", "trunc")   -> "trunc"
    """
    return f"{path}.{key}" if path else key


def _get_value(d: Mapping[str, Any], key: str, *, path: str, default: Any) -> Any:
    p = path_join(path, key)
    if key not in d:
        if default is _MISSING:
            raise ValidationError(f"Missing required field {qpath(p)}")
        return default
    return d[key]


def require_int(
    d: Mapping[str, Any],
    key: str,
    *,
    path: str = "",
    min_v: Optional[int] = None,
    max_v: Optional[int] = None,
    default: Any = _MISSING,
) -> int:
    """Read d[key] as a validated int."""
    v = _get_value(d, key, path=path, default=default)
    return ensure_int(v, path=path_join(path, key), min_v=min_v, max_v=max_v)


def require_rational(
    d: Mapping[str, Any],
    key: str,
    *,
    path: str = "",
    min_v: Optional[Fraction] = None,
    positive: bool = False,
    default: Any = _MISSING,
) -> Fraction:
    """Read d[key] as an exact rational (int, 'p/q' string or short decimal)."""
    v = _get_value(d, key, path=path, default=default)
    return ensure_rational(v, path=path_join(path, key), min_v=min_v, positive=positive)


def require_dict(
    d: Mapping[str, Any],
    key: str,
    *,
    path: str = "",
    default: Any = _MISSING,
) -> dict:
    """Read d[key] as a nested object."""
    v = _get_value(d, key, path=path, default=default)
    return ensure_dict(v, path=path_join(path, key))


def require_one_of(
    d: Mapping[str, Any],
    key: str,
    allowed: Sequence[Any],
    *,
    path: str = "",
    default: Any = _MISSING,
) -> Any:
    """Read d[key] and ensure it is one of allowed."""
    v = _get_value(d, key, path=path, default=default)
    return ensure_one_of(v, allowed, path=path_join(path, key))


def require_int_list(
    d: Mapping[str, Any],
    key: str,
    *,
    path: str = "",
    min_v: Optional[int] = None,
    strictly_increasing: bool = False,
    default: Any = _MISSING,
) -> list[int]:
    """Read d[key] as a list of ints."""
    v = _get_value(d, key, path=path, default=default)
    return ensure_int_list(v, path=path_join(path, key), min_v=min_v, strictly_increasing=strictly_increasing)
