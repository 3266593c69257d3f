"""Reconstructing a curve from sampled (t, c, lambda) triples."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactalg import as_scalar, interpolate_ratfunc
from .core import Family, TruncationCurve, make_curve


def fit_curve(
    points: Sequence[tuple],
    bounds: tuple[tuple[int, int], tuple[int, int]],
    name: str = "fit",
    param: str = "t",
    family: Family | None = None,
) -> TruncationCurve:
    """Interpolate both coordinates exactly; bounds = ((c_num, c_den), (lambda_num, lambda_den))."""
    pts = [tuple(as_scalar(v) for v in p) for p in points]
    if any(len(p) != 3 for p in pts):
        raise ValueError("points must be (t, c, lambda) triples")
    (cn, cd), (ln, ld) = bounds
    c = interpolate_ratfunc([(t, c) for t, c, _ in pts], cn, cd, param)
    lam = interpolate_ratfunc([(t, l) for t, _, l in pts], ln, ld, param)
    return make_curve(name, family or Family.external(name), c, lam)


def fit_lambda(
    samples: Sequence[tuple[Fraction, Fraction]], num_deg: int, den_deg: int, param: str = "t"
):
    """Fit only the lambda coordinate (used when c is known in closed form)."""
    return interpolate_ratfunc(samples, num_deg, den_deg, param)
