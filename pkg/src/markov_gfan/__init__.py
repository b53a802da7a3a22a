"""Exact c-/g-vector patterns, fractal maps and G-fan geometry for rank-3
B-invariant exchange matrices."""

from .errors import (
    BasisMismatch,
    ConstraintViolation,
    GfanError,
    InvalidParams,
    IrrationalRatio,
    KIsNotAWordLetter,
    NonIntegralCoordinate,
    NonPositive,
    NonReduced,
    NotAdmissible,
    NotInHalfSpace,
    SingularTriple,
)
from .exchange import ExchangeMatrix, SignPattern, integer2, markov, validate
from .gfan import (
    ComplementRay,
    Cone3,
    InCone,
    OnComplementRay,
    UnknownAtDepth,
    complements_pointwise,
    complements_recursive,
    enumerate_fan,
    locate,
    section,
)
from .pattern import PatternState, eval_walk
from .vectors import ModVec
from .walk import Walk

__version__ = "0.1.0"

__all__ = [
    "BasisMismatch",
    "ComplementRay",
    "Cone3",
    "ConstraintViolation",
    "ExchangeMatrix",
    "GfanError",
    "InCone",
    "InvalidParams",
    "IrrationalRatio",
    "KIsNotAWordLetter",
    "ModVec",
    "NonIntegralCoordinate",
    "NonPositive",
    "NonReduced",
    "NotAdmissible",
    "NotInHalfSpace",
    "OnComplementRay",
    "PatternState",
    "SignPattern",
    "SingularTriple",
    "UnknownAtDepth",
    "Walk",
    "complements_pointwise",
    "complements_recursive",
    "enumerate_fan",
    "eval_walk",
    "integer2",
    "locate",
    "markov",
    "section",
    "validate",
]
