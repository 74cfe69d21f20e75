"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed user input: bad indices, unparsable text, ill-typed arrows."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ArrowTypeError(InputError):
    """An arrow-term composition whose source and target do not match."""


class DimensionCapError(RuntimeError):
    """A matrix representation would exceed the configured dimension cap."""


class RewriteBudgetExceeded(RuntimeError):
    """Normalization ran past its step budget; indicates a bug in the rule set."""
