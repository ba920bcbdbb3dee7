# helpers/validation/__init__.py
# Public validation package façade. Prefer importing from here for a stable, explicit API surface.

from .errors import ValidationError, qpath, type_name
from .scalars import (
    ensure_dict,
    ensure_int,
    ensure_int_list,
    ensure_list,
    ensure_one_of,
    ensure_rational,
    ensure_str,
)
from .mapping import (
    path_join,
    require_dict,
    require_int,
    require_int_list,
    require_one_of,
    require_rational,
)

__all__ = [
    # errors
    "ValidationError",
    "type_name",
    "qpath",
    # scalars
    "ensure_dict",
    "ensure_list",
    "ensure_str",
    "ensure_int",
    "ensure_int_list",
    "ensure_rational",
    "ensure_one_of",
    # mapping readers
    "path_join",
    "require_int",
    "require_int_list",
    "require_rational",
    "require_dict",
    "require_one_of",
]
