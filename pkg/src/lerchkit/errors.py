"""Exception types shared across the package."""
from __future__ import annotations

__all__ = ["LerchkitError", "DomainError", "NonConvergence", "UnknownSeries"]


class LerchkitError(Exception):
    """Base class for all package-specific errors."""


class DomainError(LerchkitError, ValueError):
    """Raised when arguments fall outside a function's mathematical domain."""


class NonConvergence(LerchkitError, RuntimeError):
    """Raised when an evaluation cannot reach the requested tolerance.

    Carries the best partial value and the error bound actually achieved so
    callers can decide whether the partial result is still usable.
    """

    def __init__(self, message: str, value: complex = 0j,
                 error_estimate: float = float("inf"), terms_used: int = 0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.terms_used = terms_used


class UnknownSeries(LerchkitError, KeyError):
    """Raised when a series name is not present in the catalog."""
