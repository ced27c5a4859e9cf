"""
Custom exceptions for the footprint toolkit.

This module defines all custom exceptions used throughout the package
for consistent error handling and reporting.
"""

from typing import Optional


class FootprintError(Exception):
    """Base exception for all footprint toolkit errors."""

    def __init__(self, message: str, details: Optional[str] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self) -> str:
        if self.details:
            return f"{self.message}: {self.details}"
        return self.message


class ValidationError(FootprintError):
    """Raised when input or a precondition is invalid."""

    pass


class DimensionError(ValidationError):
    """Raised when exponent vectors have different lengths."""

    pass


class RingMismatchError(ValidationError):
    """Raised when operands live in different polynomial rings."""

    pass


class ZeroIdealError(ValidationError):
    """Raised when the zero ideal is used where a nonzero ideal is required."""

    pass


class NotGradedError(ValidationError):
    """Raised when a graded-only operation receives non-homogeneous input."""

    pass


class SizeGuardError(ValidationError):
    """Raised when a brute-force search exceeds its size guard."""

    pass


class BudgetExceededError(FootprintError):
    """Raised when a candidate enumeration would exceed its budget."""

    def __init__(self, n: int, q: int, max_candidates: int) -> None:
        self.n = n
        self.q = q
        self.candidates = q**n
        super().__init__(
            "Enumeration budget exceeded",
            f"{q}^{n} - 1 = {self.candidates - 1} candidates, budget {max_candidates}",
        )


class UnmixednessUnknownError(FootprintError):
    """Raised when an operation needs unmixedness that is neither certified nor asserted."""

    pass


class InconclusiveError(FootprintError):
    """Raised when a scan ends without an answer."""

    pass


class InternalConsistencyError(FootprintError):
    """Raised when an internal self-check fails."""

    pass
