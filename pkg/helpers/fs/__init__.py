# helpers/fs/__init__.py
# Filesystem helpers for deterministic, crash-safe report artifacts.

from .dirs import ensure_dir, ensure_parent
from .text import read_text
from .atomic import atomic_write_text
from .json import dumps_artifact, read_json
from .csv import atomic_write_csv, csv_text

__all__ = [
    # dirs
    "ensure_dir",
    "ensure_parent",
    # text
    "read_text",
    # atomic
    "atomic_write_text",
    # json
    "read_json",
    "dumps_artifact",
    # csv
    "csv_text",
    "atomic_write_csv",
]
