"""Exact rational scalars.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it is used directly as the scalar type.  This module only
adds the ``"p/q"`` text form used in every report and config file.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

ExactScalar = Fraction
Rationalish = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: Rationalish) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals are rejected on purpose."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a 'p/q' string, got {text!r}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Rationalish) -> str:
    return str(Fraction(value))


def as_scalar(value) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or 'p/q' string")
    return Fraction(value)
