"""Exception types and warning categories shared across the package."""

from __future__ import annotations

__all__ = [
    "MmxError",
    "DomainError",
    "EmptySetError",
    "StrictnessError",
    "ExtRealArithmeticError",
    "ParseError",
    "EvalError",
    "ApproximationWarning",
]


class MmxError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MmxError):
    """A point was passed to a map outside its declared domain."""


class EmptySetError(MmxError):
    """An operation that requires a nonempty set received an empty one."""


class StrictnessError(MmxError):
    """A multifunction produced an empty value on its own domain."""


class ExtRealArithmeticError(MmxError, ArithmeticError):
    """Undefined extended-real arithmetic, e.g. (+inf) + (-inf)."""


class ParseError(MmxError):
    """Syntax or scope error in a problem-definition file.

    ``line`` and ``column`` are 1-based and point at the first offending
    character.
    """

    def __init__(self, message: str, line: int, column: int, expected: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        loc = f"{line}:{column}"
        if expected:
            super().__init__(f"{loc}: {message} (expected {expected})")
        else:
            super().__init__(f"{loc}: {message}")


class EvalError(MmxError):
    """Runtime error while evaluating a parsed expression."""

    DIVISION_BY_ZERO = "division-by-zero"
    NO_GUARD_MATCHED = "no-guard-matched"
    TYPE = "type-mismatch"
    NON_FINITE = "non-finite-value"

    def __init__(self, message: str, line: int, column: int, kind: str = TYPE):
        self.message = message
        self.line = line
        self.column = column
        self.kind = kind
        super().__init__(f"{line}:{column}: {message}")


class ApproximationWarning(UserWarning):
    """The result was obtained by grid search and is not exact."""
