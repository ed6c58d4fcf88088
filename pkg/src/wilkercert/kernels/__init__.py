"""Enclosures of sin, cos, tan and evaluators for the expression catalog."""

from .cleared import (
    DEFAULT_DELTA0,
    ClearedForm,
    cleared_form,
    endpoint_model,
    endpoint_value,
    eval_cleared,
    eval_expression,
    interior_value,
    limit_at_half_pi,
    limit_at_zero,
    symbolic_form,
)
from .expressions import GAPS_FAMILY, GAPS_FIXED, RATIOS, SCALABLE_FAMILIES, ExpressionId, all_gap_ids, best_constant
from .ops import SYMBOLIC, IntervalOps, SymbolicOps
from .symbolic import TrigFrac, TrigPoly
from .trig import (
    NearSingularityError,
    cos_enclose,
    lemma_bracket_holds,
    sin_enclose,
    tan_enclose,
    tan_partial_sum,
    tan_tail_bracket,
)

__all__ = [
    "SCALABLE_FAMILIES",
    "best_constant",
    "DEFAULT_DELTA0",
    "ClearedForm",
    "ExpressionId",
    "GAPS_FAMILY",
    "GAPS_FIXED",
    "IntervalOps",
    "NearSingularityError",
    "RATIOS",
    "SYMBOLIC",
    "SymbolicOps",
    "TrigFrac",
    "TrigPoly",
    "all_gap_ids",
    "cleared_form",
    "cos_enclose",
    "endpoint_model",
    "endpoint_value",
    "eval_cleared",
    "eval_expression",
    "interior_value",
    "lemma_bracket_holds",
    "limit_at_half_pi",
    "limit_at_zero",
    "sin_enclose",
    "symbolic_form",
    "tan_enclose",
    "tan_partial_sum",
    "tan_tail_bracket",
]
