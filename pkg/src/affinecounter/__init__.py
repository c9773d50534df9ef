"""Exact simulation of realtime affine automata and affine counter automata."""

from .afa import (
    AfaSpec,
    LasVegasAfaSpec,
    OutcomeTriple,
    RestartAfaSpec,
    RestartAnalysis,
)
from .afca import AcceptMode, AfcaSpec, AfcaTransition
from .core import AffineMatrix, AffineVector, ValidationReport, apply, l1_norm, validate_matrix, weigh
from .errors import AutomatonError, DefinitionError, FormatError, InputError, NonTerminationError
from .fileformat import parse, serialize

__all__ = [
    "AcceptMode",
    "AfaSpec",
    "AfcaSpec",
    "AfcaTransition",
    "AffineMatrix",
    "AffineVector",
    "AutomatonError",
    "DefinitionError",
    "FormatError",
    "InputError",
    "LasVegasAfaSpec",
    "NonTerminationError",
    "OutcomeTriple",
    "RestartAfaSpec",
    "RestartAnalysis",
    "ValidationReport",
    "apply",
    "l1_norm",
    "parse",
    "serialize",
    "validate_matrix",
    "weigh",
]
