# helpers/math/__init__.py
"""helpers.math

Exact math helpers.

Public surface is defined by helpers.math.basic.
"""

from .basic import (
    SQRT_DIGITS,
    binom,
    fact,
    falling,
    is_rational_square,
    rational_sqrt,
    safe_div,
)

__all__ = [
    "SQRT_DIGITS",
    "binom",
    "fact",
    "falling",
    "is_rational_square",
    "rational_sqrt",
    "safe_div",
]
