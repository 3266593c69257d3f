"""Resultants by the subresultant polynomial remainder sequence."""

from __future__ import annotations

from .mpoly import MPoly


class EliminationError(ValueError):
    pass


def _strip(coeffs: list[MPoly]) -> list[MPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a = q*b + r."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lcb for c in r]
        for i, y in enumerate(b):
            r[i + shift] = r[i + shift] - lr * y
        r = _strip(r)
        e -= 1
    if e > 0:
        factor = lcb ** e
        r = [c * factor for c in r]
    return r


def _subresultant(a: list[MPoly], b: list[MPoly], one: MPoly) -> MPoly:
    # Collins/Brown subresultant PRS; all divisions below are exact in D.
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -sign
    g = one
    h = one
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _prem(a, b)
        if not r:
            return one * 0
        a = b
        divisor = g * h ** delta
        b = [c.exact_div(divisor) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g ** delta).exact_div(h ** (delta - 1))
        if len(b) - 1 == 0:
            da = len(a) - 1
            if da == 0:
                result = h
            elif da == 1:
                result = b[0]
            else:
                result = (b[0] ** da).exact_div(h ** (da - 1))
            return result * sign


def resultant(p: MPoly, q: MPoly, var: str) -> MPoly:
    """Sylvester resultant of ``p`` and ``q`` with respect to ``var``.

    The result is a polynomial in the remaining variables of ``p`` and ``q``
    (merged in first-seen order).  Sign convention: res(p, q) = lc(p)^deg(q)
    * prod q(roots of p), matching the Sylvester determinant.
    """
    if p.is_zero() or q.is_zero():
        raise EliminationError("resultant of a zero polynomial")
    variables = list(p.variables)
    for v in q.variables:
        if v not in variables:
            variables.append(v)
    if var not in variables:
        variables.append(var)
    p = p.with_variables(variables)
    q = q.with_variables(variables)
    if p.degree(var) <= 0 and q.degree(var) <= 0:
        raise EliminationError("no elimination variable")
    rest = tuple(v for v in variables if v != var)
    one = MPoly.const(1, rest)
    a = _strip(p.coeffs_in(var))
    b = _strip(q.coeffs_in(var))
    da, db = len(a) - 1, len(b) - 1
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db
    return _subresultant(a, b, one)
