import random
from fractions import Fraction as F

import pytest

from wtrunc.exactalg import InterpolationError, MPoly, PoleError, RatFunc, interpolate_ratfunc, nullspace, sample

from conftest import fraction_rank


def test_ratfunc_normalizes():
    f = RatFunc([F(-2), F(2)], [F(-3), F(0), F(3)], "t")  # 2(t-1) / 3(t^2-1)
    assert f.num_dense == [F(2, 3)]
    assert f.den_dense == [F(1), F(1)]
    assert f == RatFunc([F(2, 3)], [F(1), F(1)], "t")


def test_ratfunc_poles_raise():
    f = RatFunc([F(1)], [F(-2), F(1)], "t")
    assert f(F(3)) == 1
    with pytest.raises(PoleError) as info:
        f(2)
    assert info.value.value == 2


def test_ratfunc_arithmetic():
    t = MPoly.var("t")
    f = RatFunc(t, t + 1)
    g = RatFunc(MPoly.const(1, ("t",)), t + 1)
    assert f + g == RatFunc(MPoly.const(1, ("t",)), None, "t")
    assert (f * g)(F(1)) == F(1, 4)
    assert (f / g)(F(5)) == 5
    assert f.limit_at_infinity() == 1


def test_nullspace_matches_fraction_elimination():
    rng = random.Random(3)
    for _ in range(150):
        rows_n, cols = rng.randint(1, 6), rng.randint(1, 7)
        base = [[F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rng.randint(1, 3))]
        # rank-deficient: rows are combinations of a few base rows, some columns zeroed
        zero_cols = {c for c in range(cols) if rng.random() < 0.25}
        rows = []
        for _ in range(rows_n):
            coeffs = [rng.randint(-2, 2) for _ in base]
            rows.append([
                F(0) if c in zero_cols else sum(k * b[c] for k, b in zip(coeffs, base))
                for c in range(cols)
            ])
        basis = nullspace(rows, cols)
        rank = fraction_rank(rows)
        assert len(basis) == cols - rank
        for v in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0
        if basis:
            assert fraction_rank(basis) == len(basis)


def _random_ratfunc(rng):
    dn, dd = rng.randint(0, 3), rng.randint(0, 3)
    while True:
        num = [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dn + 1)]
        den = [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dd + 1)]
        if any(den) and any(num):
            return RatFunc(num, den, "x"), dn, dd


def test_interpolation_round_trip_100_random():
    rng = random.Random(99)
    for _ in range(100):
        f, dn, dd = _random_ratfunc(rng)
        xs, x = [], F(-7, 2)
        while len(xs) < dn + dd + 3:
            x += F(rng.randint(1, 5), rng.randint(1, 3))
            try:
                f(x)
            except ZeroDivisionError:
                continue
            xs.append(x)
        g = interpolate_ratfunc(sample(f, xs), dn, dd, "x")
        assert g == f


def test_interpolation_errors():
    pts = [(F(i), F(i * i)) for i in range(5)]
    with pytest.raises(InterpolationError, match="need at least"):
        interpolate_ratfunc(pts[:2], 1, 1)
    with pytest.raises(InterpolationError, match="distinct"):
        interpolate_ratfunc([(F(1), F(1))] * 4, 1, 1)
    with pytest.raises(InterpolationError):
        interpolate_ratfunc(pts, 1, 0)  # a parabola is not linear
    assert interpolate_ratfunc(pts, 2, 0)(F(7)) == 49
