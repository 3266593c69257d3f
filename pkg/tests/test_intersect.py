from fractions import Fraction as F

import pytest

from wtrunc.curves import d_curve, eval_curve
from wtrunc.curves.core import Family, make_curve
from wtrunc.exactalg import RatFunc
from wtrunc.intersect import (
    CRITICAL_LEVEL,
    DEGENERATE,
    EXCLUDED_POLE,
    NONTRIVIAL,
    DegenerateOverlap,
    classify_pair,
    classify_self,
    intersect_curves,
)
from wtrunc.intersect.core import cleared_system


def line(name, c, lam):
    """Curve t -> (c0 + c1 t, l0 + l1 t)."""
    return make_curve(
        name,
        Family.external("toy"),
        RatFunc([F(c[0]), F(c[1])], [F(1)], "t"),
        RatFunc([F(lam[0]), F(lam[1])], [F(1)], "t"),
    )


def test_parallel_lines_do_not_meet():
    res = intersect_curves(line("A", (0, 1), (0, 1)), line("B", (0, 1), (1, 1)))
    assert res.points == ()
    assert res.certificate.constant_gcd and res.certificate.complete


def test_crossing_lines_meet_once():
    res = intersect_curves(line("A", (0, 1), (0, 1)), line("B", (0, 1), (4, -1)))
    assert [(p.preimage_a, p.preimage_b, p.c, p.lam) for p in res.points] == [(F(2), F(2), F(2), F(2))]
    assert res.points[0].certified


def test_self_intersection_is_degenerate():
    with pytest.raises(DegenerateOverlap):
        intersect_curves(d_curve(2), d_curve(2, param="j"))


def test_cleared_system_vanishes_at_known_point():
    f, g = cleared_system(d_curve(2), d_curve(1))
    assert f(s=F(-4, 3), t=F(-5, 2)) == 0 and g(s=F(-4, 3), t=F(-5, 2)) == 0


def test_d2_d1_point_is_certified():
    recs = {(r.k, r.l): r for r in classify_pair(2, 1).records}
    rec = recs[(F(-4, 3), F(-5, 2))]
    assert rec.status == NONTRIVIAL and rec.certified
    assert (rec.c, rec.lam) == (F(4), F(17, 441))


def test_status_labels():
    recs = {(r.k, r.l): r.status for r in classify_pair(2, 1).records}
    assert recs[(F(1), F(1))] == DEGENERATE  # c = 1/2
    assert recs[(F(-3), F(-1))] == CRITICAL_LEVEL
    assert recs[(F(2), F(2))] == EXCLUDED_POLE


def test_certified_points_are_exact_on_both_curves():
    for m, n in [(2, 1), (3, 1), (3, 2), (4, 3)]:
        a, b = d_curve(m), d_curve(n)
        for p in intersect_curves(a, b).points:
            if p.certified:
                assert eval_curve(a, p.preimage_a) == eval_curve(b, p.preimage_b) == (p.c, p.lam)


def test_swapping_curves_swaps_preimages():
    ab = {(p.preimage_a, p.preimage_b) for p in intersect_curves(d_curve(3), d_curve(1)).points if p.certified}
    ba = {(p.preimage_b, p.preimage_a) for p in intersect_curves(d_curve(1), d_curve(3)).points if p.certified}
    assert ab == ba


def test_classify_self_rejects_equal_indices():
    with pytest.raises(ValueError):
        classify_self(2, 2)


def test_leftover_branch_sits_at_degenerate_c():
    cert = classify_pair(3, 1).certificate
    assert cert.branch_c == (F(-24),)
    assert cert.complete
    assert not cert.constant_gcd
