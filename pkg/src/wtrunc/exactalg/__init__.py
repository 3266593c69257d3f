"""Exact algebra substrate: rationals, polynomials, elimination, roots, interpolation."""

from .interpolate import InterpolationError, interpolate_ratfunc, nullspace, sample
from .mpoly import MPoly
from .ratfunc import PoleError, RatFunc
from .residue import Branch, gcd_mod
from .resultant import EliminationError, resultant
from .roots import RootReport, count_real_roots, find_roots, isolate_real_roots, sturm_chain
from .scalar import ExactScalar, as_scalar, format_rational, parse_rational

__all__ = [
    "Branch",
    "EliminationError",
    "ExactScalar",
    "InterpolationError",
    "MPoly",
    "PoleError",
    "RatFunc",
    "RootReport",
    "as_scalar",
    "count_real_roots",
    "find_roots",
    "format_rational",
    "gcd_mod",
    "interpolate_ratfunc",
    "isolate_real_roots",
    "nullspace",
    "parse_rational",
    "resultant",
    "sample",
    "sturm_chain",
]
