# helpers/fs/json.py
# JSON helpers for configs and report artifacts: strict reads and deterministic dumps.

from __future__ import annotations

import json
from json import JSONDecodeError
from pathlib import Path
from typing import Any

from .text import read_text


def read_json(path: str | Path, *, encoding: str = "utf-8") -> Any:
    """
    Read JSON from a file and return the decoded object.

    Raises JSONDecodeError if the content is not valid JSON (including empty files).
    """
    p = Path(path)
    s = read_text(p, encoding=encoding)

    try:
        return json.loads(s)
    except JSONDecodeError as e:
        if s.strip() == "":
            raise JSONDecodeError(f"Empty/whitespace-only JSON file: {p}", s, 0) from e
        raise


def dumps_artifact(data: Any, *, indent: int = 2) -> str:
    """
    Deterministic JSON text: sorted keys, fixed indent, ASCII-safe, trailing newline.

    Two dumps of equal data are byte-identical.
    """
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=True, allow_nan=False) + "\n"
