"""Resultants, root finding and residue-field gcds against independent oracles."""

import random
from fractions import Fraction as F

import pytest

from wtrunc.exactalg import EliminationError, MPoly, count_real_roots, find_roots, gcd_mod, resultant, sturm_chain
from wtrunc.exactalg import upoly
from wtrunc.exactalg.residue import tpoly_from_mpoly

from conftest import sylvester_resultant

VARS = ("x", "y", "z")


def random_poly(rng, max_deg=2, terms=5):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, max_deg) for _ in VARS)
        out[e] = rng.randint(-5, 5)
    return MPoly(VARS, out)


def specialize_y(p, x0, z0):
    return p.subs({"x": x0, "z": z0}).with_variables(("y",)).to_dense("y")


def test_known_small_resultants():
    x, y = MPoly.var("x", ("x", "y")), MPoly.var("y", ("x", "y"))
    assert resultant(x - y, y - 1, "y").with_variables(("x",)) == -MPoly.var("x") + 1
    assert resultant(y ** 2 - x, y - 2, "y").with_variables(("x",)) == -MPoly.var("x") + 4


def test_resultant_needs_the_variable():
    x = MPoly.var("x", ("x", "y"))
    with pytest.raises(EliminationError):
        resultant(x, x + 1, "y")


def test_resultant_matches_sylvester_determinant_on_random_specializations():
    rng = random.Random(7)
    checked = 0
    while checked < 60:
        p, q = random_poly(rng), random_poly(rng)
        if p.degree("y") < 1 or q.degree("y") < 1:
            continue
        r = resultant(p, q, "y")
        for _ in range(3):
            x0, z0 = F(rng.randint(-6, 6), rng.randint(1, 4)), F(rng.randint(-6, 6), rng.randint(1, 4))
            ps, qs = specialize_y(p, x0, z0), specialize_y(q, x0, z0)
            if upoly.deg(ps) != p.degree("y") or upoly.deg(qs) != q.degree("y"):
                continue  # leading coefficient vanished; degrees drop
            assert r.subs({"x": x0, "z": z0}).constant_value() == sylvester_resultant(ps, qs)
            checked += 1


def _resultant_gcd_instance(rng, planted):
    while True:
        a, b = random_poly(rng, 1, 3), random_poly(rng, 1, 3)
        u, v = random_poly(rng, 1, 3), random_poly(rng, 1, 3)
        y, z = MPoly.var("y", VARS), MPoly.var("z", VARS)
        x = MPoly.var("x", VARS)
        # at z = 0 both polynomials vanish on y = x
        p = (y - x) * (a + y ** 2) + z * u
        q = (y - 2 * x - 1) * (b + y) * (y - x) + z * v
        x0 = F(rng.randint(-5, 5), rng.randint(1, 3))
        z0 = F(0) if planted else F(rng.randint(-5, 5), rng.randint(1, 3))
        ps, qs = specialize_y(p, x0, z0), specialize_y(q, x0, z0)
        if upoly.deg(ps) == p.degree("y") and upoly.deg(qs) == q.degree("y"):
            return p, q, x0, z0, ps, qs


def test_resultant_vanishes_iff_specialized_gcd_nonconstant_500_instances():
    rng = random.Random(2024)
    zero_seen = nonzero_seen = 0
    for i in range(500):
        p, q, x0, z0, ps, qs = _resultant_gcd_instance(rng, planted=(i % 2 == 0))
        r = resultant(p, q, "y").subs({"x": x0, "z": z0}).constant_value()
        common = upoly.deg(upoly.gcd_(ps, qs)) >= 1
        assert (r == 0) == common
        zero_seen += r == 0
        nonzero_seen += r != 0
    assert zero_seen >= 250 and nonzero_seen >= 100


def test_find_roots_rational_and_residual():
    x = MPoly.var("x")
    rep = find_roots((2 * x - 3) * (x + 5))
    assert sorted(rep.roots) == [F(-5), F(3, 2)]
    assert rep.residual.is_constant()

    rep = find_roots(x ** 2 - 2)
    assert rep.roots == []
    assert rep.residual == x ** 2 - 2
    assert len(rep.real_root_intervals) == 2

    rep = find_roots(6 * x ** 2 + 9 * x + 6)
    assert rep.residual == 2 * x ** 2 + 3 * x + 2
    assert rep.real_root_intervals == ()


def test_find_roots_multiplicities():
    x = MPoly.var("x")
    rep = find_roots((x - F(1, 3)) ** 3 * (x + 2) * (x ** 2 + 1))
    assert dict(rep.rational_roots) == {F(1, 3): 3, F(-2): 1}
    assert rep.residual == x ** 2 + 1


def test_find_roots_rejects_bad_input():
    with pytest.raises(ValueError):
        find_roots(MPoly.const(0, ("x",)))
    with pytest.raises(ValueError):
        find_roots(MPoly.var("x", ("x", "y")) * MPoly.var("y", ("x", "y")))


def test_random_root_reports_are_consistent():
    rng = random.Random(11)
    x = MPoly.var("x")
    for _ in range(120):
        p = MPoly.const(rng.randint(1, 4), ("x",))
        for _ in range(rng.randint(0, 3)):
            p = p * (rng.randint(1, 5) * x - rng.randint(-9, 9))
        for _ in range(rng.randint(0, 2)):
            p = p * (x ** 2 + rng.randint(-7, 7) * x + rng.randint(-7, 7))
        if p.is_constant():
            continue
        rep = find_roots(p)
        dense = p.to_dense("x")
        for r, _ in rep.rational_roots:
            assert upoly.evaluate(dense, r) == 0
        res = rep.residual.to_dense("x")
        # no rational roots survive in the residual
        assert not any(upoly.evaluate(res, r) == 0 for r, _ in rep.rational_roots)
        # interval count agrees with Sturm over the whole line
        if upoly.deg(res) > 0:
            assert len(rep.real_root_intervals) == count_real_roots(upoly.squarefree_part(res))
            for a, b in rep.real_root_intervals:
                assert count_real_roots(upoly.squarefree_part(res), a, b) == 1
        # reconstruct up to a constant
        prod = rep.residual
        for r, m in rep.rational_roots:
            prod = prod * (x - r) ** m
        ratio = None
        for e, c in p.terms.items():
            q = prod.terms.get(e)
            assert q is not None
            ratio = ratio or c / q
            assert c / q == ratio


def test_sturm_chain_counts_known_roots():
    p = [F(-6), F(11), F(-6), F(1)]  # (x-1)(x-2)(x-3)
    assert len(sturm_chain(p)) >= 2
    assert count_real_roots(p) == 3
    assert count_real_roots(p, F(1), F(2)) == 1  # half-open (1, 2]
    assert count_real_roots(p, F(3, 2), F(5, 2)) == 1


def test_gcd_mod_splits_and_detects_common_roots():
    s, t = "s", "t"
    S, T = MPoly.var(s, (s, t)), MPoly.var(t, (s, t))
    # over s^2 = 2 the polynomials share t = s; over s = 1 they do not
    a = tpoly_from_mpoly((T - S) * (T + 3), s, t)
    b = tpoly_from_mpoly((T - S) * (T - 5) + (S ** 2 - 2) * T, s, t)
    modulus = upoly.mul([F(-2), F(0), F(1)], [F(-1), F(1)])
    branches = gcd_mod(a, b, modulus)
    by_mod = {br.modulus: br.gcd_degree for br in branches}
    assert by_mod[(F(-2), F(0), F(1))] == 1
    assert by_mod[(F(-1), F(1))] == 0
