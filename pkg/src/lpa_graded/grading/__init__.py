"""Graded matrix blocks, decomposition theorems and witness checking."""

from .matrices import AnchorKind, BaseKind, GradedMatrix, MatrixBlock, check_exponent, entry_degree
from .decompositions import (
    DEFAULT_MAX_PATH_LEN,
    acyclic_decomposition,
    comet_decomposition,
    graded_socle,
    has_infinitely_many_paths,
    path_length_sample,
    paths_ending_at,
)
from .witness import WitnessMap, WitnessReport, iso_witness_check

__all__ = [
    "AnchorKind",
    "BaseKind",
    "GradedMatrix",
    "MatrixBlock",
    "check_exponent",
    "entry_degree",
    "DEFAULT_MAX_PATH_LEN",
    "acyclic_decomposition",
    "comet_decomposition",
    "graded_socle",
    "has_infinitely_many_paths",
    "path_length_sample",
    "paths_ending_at",
    "WitnessMap",
    "WitnessReport",
    "iso_witness_check",
]
