"""Rewrite rules, their application, and the expanded-form normalizer."""

from .engine import (
    TraceStep,
    apply_at,
    format_path,
    format_trace,
    parse_path,
    parse_trace,
    replay,
    same_structure,
)
from .normalize import ExpandedForm, decide_equal, is_small, to_expanded_form
from .rules import (
    LIFTABLE,
    RULES,
    EulerAngles,
    RuleInstance,
    big_rule,
    euler_angles,
    expand_matrix,
    instantiate,
    matrix_core,
    raw_graph_state,
    sample_params,
)

__all__ = [
    "LIFTABLE",
    "RULES",
    "EulerAngles",
    "ExpandedForm",
    "RuleInstance",
    "TraceStep",
    "apply_at",
    "big_rule",
    "decide_equal",
    "euler_angles",
    "expand_matrix",
    "format_path",
    "format_trace",
    "instantiate",
    "is_small",
    "matrix_core",
    "parse_path",
    "parse_trace",
    "raw_graph_state",
    "replay",
    "same_structure",
    "sample_params",
    "to_expanded_form",
]
