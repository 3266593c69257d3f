"""Exact rational-function interpolation through a linearized system."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .ratfunc import RatFunc
from .scalar import as_scalar


class InterpolationError(ValueError):
    pass


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * den) for c in row])
    return out


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace, via fraction-free (Bareiss) elimination."""
    m = _integer_rows(rows)
    pivots: list[int] = []
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            for j in range(col + 1, ncols):
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            acc = sum((m[i][j] * vec[j] for j in range(pc + 1, ncols)), Fraction(0))
            vec[pc] = -acc / m[i][pc]
        basis.append(vec)
    return basis


def interpolate_ratfunc(
    points: Sequence[tuple], num_deg: int, den_deg: int, var: str = "x"
) -> RatFunc:
    """Rational function of degree at most (num_deg, den_deg) through ``points``.

    Solves num(x_i) - y_i * den(x_i) = 0 exactly, preferring the smallest
    denominator degree, then checks every point against the reduced result.
    """
    if num_deg < 0 or den_deg < 0:
        raise InterpolationError("degree bounds must be nonnegative")
    pts = [(as_scalar(x), as_scalar(y)) for x, y in points]
    need = num_deg + den_deg + 2
    if len(pts) < need:
        raise InterpolationError(f"need at least {need} points, got {len(pts)}")
    if len({x for x, _ in pts}) != len(pts):
        raise InterpolationError("abscissae must be distinct")

    for dd in range(den_deg + 1):
        ncols = num_deg + 1 + dd + 1
        rows = [
            [x ** i for i in range(num_deg + 1)] + [-y * x ** i for i in range(dd + 1)]
            for x, y in pts
        ]
        basis = nullspace(rows, ncols)
        if not basis:
            continue
        vec = basis[0]
        num, den = vec[: num_deg + 1], vec[num_deg + 1:]
        if not any(den):
            continue
        f = RatFunc(num, den, var)
        for x, y in pts:
            try:
                ok = f(x) == y
            except ZeroDivisionError:
                ok = False
            if not ok:
                raise InterpolationError(f"degree bounds too small: point ({x}, {y}) not attained")
        return f
    raise InterpolationError("inconsistent data")


def sample(f: RatFunc, xs: Sequence) -> list[tuple[Fraction, Fraction]]:
    return [(as_scalar(x), f(x)) for x in xs]
