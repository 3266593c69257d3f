"""Implicit equations of rationally parametrized curves."""

from __future__ import annotations

from fractions import Fraction

from ..exactalg import MPoly, find_roots, resultant
from ..exactalg import upoly
from .core import TruncationCurve

SAMPLES_PER_FACTOR = 20


def sample_parameters(curve: TruncationCurve, count: int) -> list[Fraction]:
    """Deterministic non-excluded rational parameters."""
    out: list[Fraction] = []
    i = 0
    while len(out) < count:
        i += 1
        for t in (Fraction(i + 2, 3), Fraction(-i, 2)):
            if not curve.is_excluded(t) and t not in out:
                out.append(t)
    return out[:count]


def _content(poly: MPoly, main: str, other: str) -> list[Fraction]:
    """gcd (dense in ``other``) of the coefficients of ``poly`` viewed in ``main``."""
    g: list = []
    for coeff in poly.coeffs_in(main):
        if coeff.terms:
            g = upoly.gcd_(g, coeff.with_variables((other,)).to_dense(other))
    return g


def _candidate_factors(content: list[Fraction], var: str) -> list[MPoly]:
    if upoly.deg(content) < 1:
        return []
    report = find_roots(MPoly.from_dense(content, var))
    out = [MPoly.from_dense([-r, 1], var) for r in report.roots]
    if report.residual.degree(var) >= 1:
        out.append(report.residual)
    return out


def implicitize(curve: TruncationCurve, cvar: str = "c", lvar: str = "lambda") -> MPoly:
    """Nonzero polynomial in (cvar, lvar) vanishing on the parametrized curve.

    The parameter is eliminated by a resultant.  Univariate content factors
    (lines c = const or lambda = const picked up from degenerate leading
    coefficients) are tested on sampled curve points and dropped when they
    vanish at none of them.
    """
    t = curve.param
    if t in (cvar, lvar):
        raise ValueError("parameter name clashes with the plane coordinates")
    if curve.c.is_constant() or curve.lam.is_constant():
        raise ValueError(f"curve {curve.name} is constant in one coordinate")
    vs = (t, cvar, lvar)
    c_num = curve.c.num.rename({curve.c.var: t}).with_variables(vs)
    c_den = curve.c.den.rename({curve.c.var: t}).with_variables(vs)
    l_num = curve.lam.num.rename({curve.lam.var: t}).with_variables(vs)
    l_den = curve.lam.den.rename({curve.lam.var: t}).with_variables(vs)
    eq_c = MPoly.var(cvar, vs) * c_den - c_num
    eq_l = MPoly.var(lvar, vs) * l_den - l_num
    poly = resultant(eq_c, eq_l, t).with_variables((cvar, lvar))
    if poly.is_zero():
        raise ValueError("elimination collapsed to zero")

    points = [(curve.c(s), curve.lam(s)) for s in sample_parameters(curve, SAMPLES_PER_FACTOR)]
    for main, other, coord in ((lvar, cvar, 0), (cvar, lvar, 1)):
        for factor in _candidate_factors(_content(poly, main, other), other):
            dense = factor.to_dense(other)
            hits = sum(1 for pt in points if upoly.evaluate(dense, pt[coord]) == 0)
            if hits == len(points):
                continue
            if hits:
                raise RuntimeError(
                    f"factor {factor} vanishes at {hits}/{len(points)} sampled points"
                )
            f2 = factor.with_variables((cvar, lvar))
            while True:
                q, r = poly.divmod_lex(f2)
                if r.terms:
                    break
                poly = q
    return poly.primitive()
