"""Scalable ZX-calculus: diagrams over qubit registers, their semantics and rewriting."""

from . import f2linalg
from .diagram import (
    Cap,
    Cup,
    Diagram,
    Divider,
    EmptyScalar,
    Gatherer,
    GreenSpider,
    Hadamard,
    Identity,
    MatrixBox,
    Par,
    RedSpider,
    Seq,
    Swap,
    WireType,
    compose,
    identity,
    merge,
    par,
    permutation,
    rewire,
    seq,
    split,
    split_many,
    tensor,
    transpose,
)
from .dsl import parse, to_dot, to_dsl
from .errors import (
    ComparisonError,
    CompositionError,
    MatchError,
    ParameterError,
    ParseError,
    ResourceError,
    ShapeError,
    StructuralError,
    SZXError,
)
from .f2linalg import F2Matrix
from .semantics import SemanticsValue, apply_state, equal_semantics, interpret

__version__ = "0.1.0"
