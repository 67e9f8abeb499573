"""Exception types shared across the package."""

from __future__ import annotations


class StanleyError(Exception):
    """Base class for all library errors."""


class RingMismatchError(StanleyError):
    """Operands live in different polynomial rings."""


class DomainError(StanleyError):
    """Input is outside the mathematical domain of the operation."""


class ExponentCapError(StanleyError):
    """A generator exponent exceeds the configured cap."""


class ResourceLimitError(StanleyError):
    """A search exceeded its point, attempt, or time budget."""


class ParseError(StanleyError):
    """Ideal text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
