"""
Custom exception classes.
"""

from typing import Optional


class LpaError(Exception):
    """Base exception for lpa-graded operations."""
    pass


class InputError(LpaError):
    """Raised when user-supplied input is rejected. Maps to exit status 1."""
    pass


class GraphValidationError(InputError):
    """Raised when a graph violates the data-model invariants."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field
        self.message = message


class ParsingError(InputError):
    """Raised when the text graph format cannot be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
        self.line = line
        self.column = column
        self.message = message


class SchemaError(InputError):
    """Raised when a JSON graph document violates the schema."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


class ExpressionError(InputError):
    """Raised when an algebra expression cannot be parsed."""

    def __init__(self, message: str, column: int = 0):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.message = message


class CorpusError(InputError):
    """Raised for unknown corpus names or out-of-range parameters."""
    pass


class ConfigError(InputError):
    """Raised when configuration cannot be loaded."""
    pass


class HypothesisError(InputError):
    """Raised when a theorem hypothesis required by an operation fails."""
    pass


class OracleGuardError(InputError):
    """Raised when an exhaustive oracle would exceed its size guard."""
    pass


class ModuleError(InputError):
    """Raised for invalid module inputs."""
    pass


class GraphMismatchError(InputError):
    """Raised when operands live over different graphs."""
    pass


class GradingError(InputError):
    """Raised when a matrix entry violates the period of its base ring."""
    pass


class PathLengthExceeded(InputError):
    """Raised when rewriting produces a path longer than the configured bound."""
    pass


class InvariantViolation(LpaError):
    """Raised when an internal invariant check fails. Maps to exit status 2."""
    pass
