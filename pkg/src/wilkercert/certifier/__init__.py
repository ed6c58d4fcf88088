"""Inequality catalog, sign certification, best constants and sweeps."""

from .catalog import CASES, CATALOG, DOMINANCE_PAIRS, HALF_PI_DOMAIN, InequalityCase, get_case
from .constants import BEST_CONSTANT_FAMILIES, BestConstantPair, all_best_constants, best_constants, certified_decimal
from .engine import (
    INCONCLUSIVE,
    PROVED,
    REFUTED,
    Certificate,
    CertifyConfig,
    Leaf,
    adverse_scale,
    certify_expression,
    certify_sign,
)
from .sweep import SweepResult, SweepRow, grid_nodes, sweep

__all__ = [
    "BEST_CONSTANT_FAMILIES",
    "BestConstantPair",
    "CASES",
    "CATALOG",
    "Certificate",
    "CertifyConfig",
    "DOMINANCE_PAIRS",
    "HALF_PI_DOMAIN",
    "INCONCLUSIVE",
    "InequalityCase",
    "Leaf",
    "PROVED",
    "REFUTED",
    "SweepResult",
    "SweepRow",
    "adverse_scale",
    "all_best_constants",
    "best_constants",
    "certified_decimal",
    "certify_expression",
    "certify_sign",
    "get_case",
    "grid_nodes",
    "sweep",
]
