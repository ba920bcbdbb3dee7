# helpers/fs/csv.py
# CSV artifact writer: fixed header order, LF line endings, atomic replace.

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .atomic import atomic_write_text


def csv_text(header: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    """
    Render rows to CSV text with the given column order.

    Missing keys become empty cells; unknown keys are an error so a typo in a
    column name cannot silently drop data.
    """
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(header), lineterminator="\n", extrasaction="raise")
    w.writeheader()
    for r in rows:
        w.writerow(dict(r))
    return buf.getvalue()


def atomic_write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Mapping[str, Any]],
    *,
    encoding: str = "utf-8",
) -> None:
    atomic_write_text(path, csv_text(header, rows), encoding=encoding)
