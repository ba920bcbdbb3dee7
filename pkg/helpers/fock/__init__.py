# helpers/fock/__init__.py
"""helpers.fock

Closed-form weighted inner products and Gram metrics for the Gaussian weight |z|^2.
"""

from .pi_rational import PiRational
from .inner import inner, monomial_inner, norm_sq
from .gram import (
    GRAM_CSV_HEADER,
    GramBlock,
    charge_basis,
    factor_basis,
    gram,
    gram_matrix,
    gram_solve,
    split_by_charge,
    truncated_basis,
    write_gram_csv,
)

__all__ = [
    "PiRational",
    "inner",
    "norm_sq",
    "monomial_inner",
    "GramBlock",
    "gram",
    "gram_matrix",
    "charge_basis",
    "factor_basis",
    "gram_solve",
    "split_by_charge",
    "truncated_basis",
    "write_gram_csv",
    "GRAM_CSV_HEADER",
]
