# helpers/fs/text.py
# Text reads with explicit encoding.

from __future__ import annotations

from pathlib import Path


def read_text(path: str | Path, *, encoding: str = "utf-8") -> str:
    """Read a text file."""
    return Path(path).read_text(encoding=encoding)
