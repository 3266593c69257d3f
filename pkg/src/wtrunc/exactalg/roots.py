"""Rational roots and real-root isolation for univariate polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, ceil

from . import upoly
from .mpoly import MPoly


@dataclass(frozen=True)
class RootReport:
    var: str
    rational_roots: tuple[tuple[Fraction, int], ...]
    residual: MPoly
    real_root_intervals: tuple[tuple[Fraction, Fraction], ...] = field(default=())

    @property
    def roots(self) -> list[Fraction]:
        return [r for r, _ in self.rational_roots]

    @property
    def residual_degree(self) -> int:
        return self.residual.degree(self.var)


def sturm_chain(p: upoly.UPoly) -> list[upoly.UPoly]:
    chain = [upoly.strip(p), upoly.derivative(p)]
    while chain[-1]:
        r = upoly.rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(upoly.neg(r))
    return [c for c in chain if c]


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(chain: list[upoly.UPoly], x) -> list[int]:
    return [upoly.sign_at(c, x) for c in chain]


def _signs_at_inf(chain: list[upoly.UPoly], positive: bool) -> list[int]:
    out = []
    for c in chain:
        s = 1 if c[-1] > 0 else -1
        if not positive and upoly.deg(c) % 2:
            s = -s
        out.append(s)
    return out


def count_real_roots(p: upoly.UPoly, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; None means infinite endpoint."""
    chain = sturm_chain(p)
    left = _signs_at_inf(chain, False) if lo is None else _signs_at(chain, lo)
    right = _signs_at_inf(chain, True) if hi is None else _signs_at(chain, hi)
    return _variations(left) - _variations(right)


def root_bound(p: upoly.UPoly) -> Fraction:
    """Cauchy bound: every root has absolute value below it."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: upoly.UPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], each holding exactly one distinct real root."""
    p = upoly.strip(p)
    if upoly.deg(p) < 1:
        return []
    chain = sturm_chain(p)

    def count(a, b):
        return _variations(_signs_at(chain, a)) - _variations(_signs_at(chain, b))

    bound = root_bound(p)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    out.sort()
    return out


def refine(p: upoly.UPoly, a: Fraction, b: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink (a, b] around its single root of squarefree ``p`` by bisection."""
    if upoly.evaluate(p, b) == 0:
        return b, b
    sb = upoly.sign_at(p, b)
    while b - a >= width:
        mid = (a + b) / 2
        sm = upoly.sign_at(p, mid)
        if sm == 0:
            return mid, mid
        if sm == sb:
            b = mid
        else:
            a = mid
    return a, b


def _rational_roots_squarefree(sqf: upoly.UPoly) -> list[Fraction]:
    # A rational root p/q of a primitive integer polynomial has q | leading coefficient,
    # so once an isolating interval is narrower than 1/lead it holds at most one candidate.
    ints = upoly.primitive_int(sqf)
    lead = ints[-1]
    found = []
    for a, b in isolate_real_roots(sqf):
        lo, hi = refine(sqf, a, b, Fraction(1, 2 * lead))
        if lo == hi:
            found.append(lo)
            continue
        for num in range(ceil(lo * lead), floor(hi * lead) + 1):
            cand = Fraction(num, lead)
            if lo < cand <= hi and upoly.evaluate(sqf, cand) == 0:
                found.append(cand)
    return found


def find_roots(p: MPoly) -> RootReport:
    """Rational roots with multiplicity, rational-root-free residual, real isolation.

    The residual satisfies ``p == const * residual * prod (x - r)**mult``; its
    distinct real roots are isolated by open intervals with rational endpoints.
    """
    free = p.free_variables()
    if len(free) > 1:
        raise ValueError(f"find_roots needs a univariate polynomial, got variables {free}")
    if p.is_zero():
        raise ValueError("identically zero")
    var = free[0] if free else (p.variables[0] if p.variables else "x")
    dense = p.to_dense(var)
    rational: list[tuple[Fraction, int]] = []
    residual = upoly.monic(dense)
    if upoly.deg(dense) >= 1:
        sqf = upoly.squarefree_part(dense)
        for r in _rational_roots_squarefree(sqf):
            lin = [-r, Fraction(1)]
            mult = 0
            while True:
                q, rem = upoly.divmod_(residual, lin)
                if rem:
                    break
                residual = q
                mult += 1
            rational.append((r, mult))
    rational.sort()
    residual_int = upoly.primitive_int(residual)
    intervals = []
    if upoly.deg(residual) >= 1:
        for a, b in isolate_real_roots(upoly.squarefree_part(residual)):
            intervals.append((a, b))
    return RootReport(
        var=var,
        rational_roots=tuple(rational),
        residual=MPoly.from_dense(residual_int, var),
        real_root_intervals=tuple(intervals),
    )
