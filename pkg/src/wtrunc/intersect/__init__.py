"""Curve intersections and checks of the closed-form coincidence lists."""

from .core import (
    CRITICAL_LEVEL,
    DEGENERATE,
    DEGENERATE_C,
    EXCLUDED_POLE,
    NONTRIVIAL,
    CoincidenceRecord,
    DegenerateOverlap,
    IntersectionPoint,
    IntersectionResult,
    ResidualCertificate,
    SelfClassification,
    classify_pair,
    classify_self,
    filter_points,
    intersect_curves,
)
from .theorems import T41, T42, T43, TABLES, TheoremItem, TheoremTable, expected_self_coincidences
from .verify import (
    Check,
    ReconciliationReport,
    VerificationReport,
    completeness_report,
    reconcile_lambda,
    reports_from_json,
    reports_to_csv,
    reports_to_json,
    verify_theorem,
)

__all__ = [
    "CRITICAL_LEVEL",
    "DEGENERATE",
    "DEGENERATE_C",
    "EXCLUDED_POLE",
    "NONTRIVIAL",
    "T41",
    "T42",
    "T43",
    "TABLES",
    "Check",
    "CoincidenceRecord",
    "DegenerateOverlap",
    "IntersectionPoint",
    "IntersectionResult",
    "ReconciliationReport",
    "ResidualCertificate",
    "SelfClassification",
    "TheoremItem",
    "TheoremTable",
    "VerificationReport",
    "classify_pair",
    "classify_self",
    "completeness_report",
    "expected_self_coincidences",
    "filter_points",
    "intersect_curves",
    "reconcile_lambda",
    "reports_from_json",
    "reports_to_csv",
    "reports_to_json",
    "verify_theorem",
]
