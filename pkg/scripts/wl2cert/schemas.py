# scripts/wl2cert/schemas.py
# Top-level artifact checks against the descriptors in schemas/<name>.json.

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Mapping

from helpers.validation import ValidationError, ensure_dict, ensure_int, ensure_str, qpath, type_name

SCHEMA_DIR = Path(__file__).resolve().parent / "schemas"

_TYPES = {
    "string": lambda v: isinstance(v, str),
    "integer": lambda v: isinstance(v, int) and not isinstance(v, bool),
    "number": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool),
    "boolean": lambda v: isinstance(v, bool),
    "object": lambda v: isinstance(v, dict),
    "array": lambda v: isinstance(v, list),
}


def schema_names() -> list[str]:
    return sorted(p.stem for p in SCHEMA_DIR.glob("*.json"))


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    p = SCHEMA_DIR / f"{name}.json"
    if not p.is_file():
        raise ValidationError(f"unknown artifact schema {name!r} (known: {schema_names()})")
    obj = ensure_dict(json.loads(p.read_text(encoding="utf-8")), path=p.name)
    ensure_str(obj.get("schema"), path=f"{p.name}.schema")
    ensure_int(obj.get("schema_version"), path=f"{p.name}.schema_version", min_v=1)
    fields = ensure_dict(obj.get("fields"), path=f"{p.name}.fields")
    for key, t in fields.items():
        if t.rstrip("?") not in _TYPES:
            raise ValidationError(f"{qpath(f'{p.name}.fields.{key}')} has unknown type {t!r}")
    return obj


def validate_artifact(doc: Mapping[str, Any]) -> None:
    """
    Check schema/schema_version and every declared field.

    Unknown top-level keys are rejected so that report layouts only change
    together with their descriptor.
    """
    obj = ensure_dict(doc, path="artifact")
    name = ensure_str(obj.get("schema"), path="artifact.schema")
    schema = load_schema(name)
    version = obj.get("schema_version")
    if version != schema["schema_version"]:
        raise ValidationError(
            f"{qpath('artifact.schema_version')} must be {schema['schema_version']} for {name} (got {version!r})"
        )
    fields: Dict[str, str] = schema["fields"]
    for key, t in fields.items():
        optional = t.endswith("?")
        if key not in obj:
            if optional:
                continue
            raise ValidationError(f"{name}: missing field {qpath(key)}")
        if not _TYPES[t.rstrip("?")](obj[key]):
            raise ValidationError(f"{name}: {qpath(key)} must be {t.rstrip('?')} (got {type_name(obj[key])})")
    extra = sorted(set(obj) - set(fields) - {"schema", "schema_version"})
    if extra:
        raise ValidationError(f"{name}: unexpected fields {extra}")


__all__ = ["SCHEMA_DIR", "schema_names", "load_schema", "validate_artifact"]
