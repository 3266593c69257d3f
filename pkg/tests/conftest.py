"""Shared helpers: independent oracles that do not touch the package's algorithms."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def det(matrix):
    """Determinant by plain Fraction Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        result *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return sign * result


def sylvester_resultant(p, q):
    """Res(p, q) for dense ascending coefficient lists, as det of the Sylvester matrix."""
    p = list(p)
    q = list(q)
    while p and p[-1] == 0:
        p.pop()
    while q and q[-1] == 0:
        q.pop()
    dp, dq = len(p) - 1, len(q) - 1
    if dp < 0 or dq < 0:
        return Fraction(0)
    if dp == 0 and dq == 0:
        return Fraction(1)
    size = dp + dq
    rows = []
    pd = p[::-1]
    qd = q[::-1]
    for i in range(dq):
        rows.append([0] * i + pd + [0] * (size - i - len(pd)))
    for i in range(dp):
        rows.append([0] * i + qd + [0] * (size - i - len(qd)))
    return det(rows)


def fraction_rank(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                f = a[r][col] / a[rank][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


@pytest.fixture
def sylvester():
    return sylvester_resultant
