"""Dense univariate polynomials over Q.

A polynomial is a list of ``Fraction`` coefficients in ascending degree,
with no trailing zeros; the zero polynomial is ``[]``.  These helpers are
the fast path underneath ``MPoly`` for everything that is univariate
(root finding, gcds, Sturm chains, residue-ring arithmetic).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

UPoly = list  # list[Fraction], ascending degree


def strip(p: Sequence) -> UPoly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: UPoly) -> int:
    return len(p) - 1  # -1 for zero


def lc(p: UPoly) -> Fraction:
    return p[-1] if p else Fraction(0)


def add(a: UPoly, b: UPoly) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def neg(a: UPoly) -> UPoly:
    return [-c for c in a]


def sub(a: UPoly, b: UPoly) -> UPoly:
    return add(a, neg(b))


def scale(a: UPoly, s) -> UPoly:
    if s == 0:
        return []
    return [c * s for c in a]


def mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return strip(out)


def power(a: UPoly, e: int) -> UPoly:
    out = [Fraction(1)]
    base = a
    while e:
        if e & 1:
            out = mul(out, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return out


def divmod_(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = strip(a)
    db = deg(b)
    if deg(r) < db:
        return [], strip(r)
    q = [Fraction(0)] * (deg(r) - db + 1)
    inv = 1 / b[-1]
    for i in range(deg(r) - db, -1, -1):
        c = r[i + db] * inv
        q[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] -= c * y
    return strip(q), strip(r[:db])


def rem(a: UPoly, b: UPoly) -> UPoly:
    return divmod_(a, b)[1]


def exact_div(a: UPoly, b: UPoly) -> UPoly:
    q, r = divmod_(a, b)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def monic(a: UPoly) -> UPoly:
    a = strip(a)
    if not a:
        return []
    inv = 1 / a[-1]
    return [c * inv for c in a]


def gcd_(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = strip(a), strip(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = strip(a), strip(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = 1 / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(a: UPoly) -> UPoly:
    return strip([c * i for i, c in enumerate(a)][1:])


def evaluate(a: UPoly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_part(a: UPoly) -> UPoly:
    if deg(a) < 1:
        return monic(a)
    return exact_div(monic(a), gcd_(a, derivative(a)))


def primitive_int(a: UPoly) -> list[int]:
    """Integer primitive form with positive leading coefficient."""
    if not a:
        return []
    den = lcm(*(c.denominator for c in a))
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    sign = -1 if ints[-1] < 0 else 1
    return [sign * c // g for c in ints]


def compose_linear(a: UPoly, alpha, beta) -> UPoly:
    """a(alpha*x + beta)."""
    out: UPoly = []
    lin = strip([beta, alpha])
    for c in reversed(a):
        out = add(mul(out, lin), [Fraction(c)] if c else [])
    return out


def sign_at(a: UPoly, x) -> int:
    v = evaluate(a, x)
    return (v > 0) - (v < 0)
