"""Numerical verification of sharp norm inequalities for harmonic functions on the unit disk."""

from .constants import table
from .errors import (
    DegenerateZero,
    DiskIneqError,
    NoConvergence,
    NonFiniteSample,
    NotRealValued,
    OutOfRange,
    PreconditionFailed,
)
from .functions import (
    EvalPoint,
    ExpOfHarmonic,
    FaFamily,
    Monomial,
    TaylorPair,
    TaylorSeries,
    analytic_completion,
    holomorphic,
    is_real,
    parse_function,
)
from .norms import NormResult, bergman_norm, hardy_norm
from .quad import CircleRule, DiskRule, QuadResult, adaptive

__version__ = "0.1.0"

__all__ = [
    "CircleRule", "DegenerateZero", "DiskIneqError", "DiskRule", "EvalPoint", "ExpOfHarmonic",
    "FaFamily", "Monomial", "NoConvergence", "NonFiniteSample", "NormResult", "NotRealValued",
    "OutOfRange", "PreconditionFailed", "QuadResult", "TaylorPair", "TaylorSeries", "adaptive",
    "analytic_completion", "bergman_norm", "hardy_norm", "holomorphic", "is_real",
    "parse_function", "table",
]
