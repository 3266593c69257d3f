"""Polynomial gcds over Q[s]/(m(s)) for squarefree m, splitting on zero divisors.

When ``m`` is reducible the quotient ring is a product of fields.  Whenever
a leading coefficient turns out to be a zero divisor, ``m`` is split into
coprime factors and each branch continues separately.  The result is a list
of branches ``(modulus, gcd)``, one per factor of ``m`` that was separated.
Used to decide, without algebraic-number arithmetic, whether two
polynomials in ``t`` share a root when ``s`` is any root of ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .mpoly import MPoly

# a polynomial in t with coefficients in Q[s], as a list of dense s-polys
TPoly = list


@dataclass(frozen=True)
class Branch:
    modulus: tuple[Fraction, ...]  # monic squarefree factor of m, dense in s
    gcd_degree: int
    gcd: tuple[tuple[Fraction, ...], ...]  # monic-in-t gcd, coefficients reduced mod modulus


class _Split(Exception):
    def __init__(self, factor):
        self.factor = factor


def _reduce(p: TPoly, m) -> TPoly:
    out = [upoly.rem(c, m) for c in p]
    while out and not out[-1]:
        out.pop()
    return out


def _normalize_lc(p: TPoly, m) -> TPoly:
    """Drop leading coefficients that vanish mod m; make the leading one 1.

    Raises _Split when the leading coefficient is a nonunit nonzero element.
    """
    p = _reduce(p, m)
    if not p:
        return p
    g, inv, _ = upoly.xgcd(p[-1], m)
    if upoly.deg(g) > 0:
        raise _Split(g)
    return _reduce([upoly.mul(c, inv) for c in p], m)


def _rem(a: TPoly, b: TPoly, m) -> TPoly:
    # b is monic in t
    a = list(a)
    db = len(b) - 1
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        lead = a[-1]
        for i, y in enumerate(b):
            a[i + shift] = upoly.rem(upoly.sub(a[i + shift], upoly.mul(lead, y)), m)
        while a and not a[-1]:
            a.pop()
    return a


def _gcd_in_field(a: TPoly, b: TPoly, m) -> TPoly:
    a = _normalize_lc(a, m)
    b = _normalize_lc(b, m)
    while b:
        a, b = b, _normalize_lc(_rem(a, b, m), m)
    return a


def gcd_mod(a: TPoly, b: TPoly, modulus) -> list[Branch]:
    """gcd over Q[s]/(modulus) of two t-polynomials with Q[s] coefficients."""
    m0 = upoly.monic(upoly.strip(modulus))
    if upoly.deg(m0) < 1:
        return []
    out: list[Branch] = []
    todo = [m0]
    while todo:
        m = todo.pop()
        try:
            g = _gcd_in_field(a, b, m)
        except _Split as split:
            f1 = upoly.monic(split.factor)
            f2 = upoly.exact_div(m, f1)
            todo.extend([f2, f1])
            continue
        out.append(Branch(
            modulus=tuple(m),
            gcd_degree=len(g) - 1,
            gcd=tuple(tuple(c) for c in g),
        ))
    out.sort(key=lambda br: (len(br.modulus), br.modulus))
    return out


def tpoly_from_mpoly(p: MPoly, s: str, t: str) -> TPoly:
    """Coefficients in t of a bivariate MPoly, each a dense polynomial in s."""
    coeffs = p.with_variables((s, t)).coeffs_in(t)
    return [c.to_dense(s) if c.terms else [] for c in coeffs]
