"""Truncation curves in the (c, lambda) plane."""

from .config import ConfigError, ConfigWarning, CurveRegistry, curve_to_dict, load_curves, serialize_curves
from .core import (
    CRITICAL,
    POLE_OF_C,
    POLE_OF_LAMBDA,
    Exclusion,
    Family,
    TruncationCurve,
    d_curve,
    eval_curve,
    make_curve,
    raw_point,
    same_curve,
)
from .fit import fit_curve, fit_lambda
from .implicit import implicitize

__all__ = [
    "CRITICAL",
    "POLE_OF_C",
    "POLE_OF_LAMBDA",
    "ConfigError",
    "ConfigWarning",
    "CurveRegistry",
    "Exclusion",
    "Family",
    "TruncationCurve",
    "curve_to_dict",
    "d_curve",
    "eval_curve",
    "fit_curve",
    "fit_lambda",
    "implicitize",
    "load_curves",
    "make_curve",
    "raw_point",
    "same_curve",
    "serialize_curves",
]
