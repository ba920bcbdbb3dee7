# helpers/errors.py
# Numerical error hierarchy shared by operators, quadrature and the solver services.

from __future__ import annotations

from helpers.validation import ValidationError


class NumericalError(RuntimeError):
    """Base class for failures of a numerical procedure on valid input."""


class BufferTooSmall(ValidationError):
    """
    The truncation buffer cannot hold H* of the test space.

    A configuration problem, so it is a ValidationError (CLI exit 2).
    """


class NoSolutionInTruncation(NumericalError):
    """f is not in the range of the truncated operator; a larger buffer may help."""


class IllConditioned(NumericalError):
    """A factorization pivot or eigenvalue fell below the relative floor."""


class QuadratureNotConverged(NumericalError):
    """Node doubling disagreed by more than the requested tolerance."""


class PositivityViolated(NumericalError):
    """A weight expression required to be positive is <= 0 at a quadrature node."""


__all__ = [
    "NumericalError",
    "BufferTooSmall",
    "NoSolutionInTruncation",
    "IllConditioned",
    "QuadratureNotConverged",
    "PositivityViolated",
]
