"""Utility modules."""

from .errors import (
    LpaError,
    InputError,
    GraphValidationError,
    ParsingError,
    SchemaError,
    ExpressionError,
    CorpusError,
    ConfigError,
    HypothesisError,
    OracleGuardError,
    ModuleError,
    GraphMismatchError,
    GradingError,
    PathLengthExceeded,
    InvariantViolation,
)
from .ids import is_valid_identifier, generate_edge_id
from .linalg import SparseVector, EchelonBasis, rank_of

__all__ = [
    "LpaError",
    "InputError",
    "GraphValidationError",
    "ParsingError",
    "SchemaError",
    "ExpressionError",
    "CorpusError",
    "ConfigError",
    "HypothesisError",
    "OracleGuardError",
    "ModuleError",
    "GraphMismatchError",
    "GradingError",
    "PathLengthExceeded",
    "InvariantViolation",
    "is_valid_identifier",
    "generate_edge_id",
    "SparseVector",
    "EchelonBasis",
    "rank_of",
]
