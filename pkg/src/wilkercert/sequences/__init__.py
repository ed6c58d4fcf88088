"""Discrete objects of the proofs: coefficient laws, claims, majorant sequences, identities."""

from ..coeffs import huygens_coeff, wilker2_family_coeff, wilker2_family_tail, wilker_coeff
from .claims import (
    CLAIM_FAMILIES,
    claim_boundary,
    claim_check,
    claim_difference,
    ratio2_reduction,
    ratio_display_report,
    ratio_mono_check,
)
from .exppoly import ExpPoly
from .identities import CheckResult, appendix_range_check, exp_poly_checks, huygens_kernel_positive
from .kernel_identities import kernel_identity_checks
from .proof import (
    PRINTED_CLOSED_FORMS,
    SEQUENCE_IDS,
    Y_VARIANTS,
    SequenceComparison,
    compare_with_threshold,
    is_decreasing,
    proof_sequence_value,
    sequence_exact,
    threshold_exact,
)

__all__ = [
    "CLAIM_FAMILIES",
    "CheckResult",
    "ExpPoly",
    "PRINTED_CLOSED_FORMS",
    "SEQUENCE_IDS",
    "SequenceComparison",
    "Y_VARIANTS",
    "appendix_range_check",
    "claim_boundary",
    "claim_check",
    "claim_difference",
    "compare_with_threshold",
    "exp_poly_checks",
    "huygens_coeff",
    "huygens_kernel_positive",
    "is_decreasing",
    "kernel_identity_checks",
    "proof_sequence_value",
    "ratio2_reduction",
    "ratio_display_report",
    "ratio_mono_check",
    "sequence_exact",
    "threshold_exact",
    "wilker2_family_coeff",
    "wilker2_family_tail",
    "wilker_coeff",
]
