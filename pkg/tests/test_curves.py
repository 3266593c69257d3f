import json
import random
import warnings
from fractions import Fraction as F

import pytest

from wtrunc.curves import (
    CRITICAL,
    POLE_OF_C,
    POLE_OF_LAMBDA,
    ConfigError,
    ConfigWarning,
    d_curve,
    eval_curve,
    fit_curve,
    implicitize,
    load_curves,
    same_curve,
    serialize_curves,
)
from wtrunc.curves.dfamily import P_COEFFS, Q_COEFFS, R_COEFFS, c_direct, critical_levels, lambda_direct
from wtrunc.curves.implicit import sample_parameters
from wtrunc.exactalg import PoleError


def test_d1_closed_forms():
    curve = d_curve(1)
    assert curve.c(F(4)) == F(7, 5)
    assert curve.c == type(curve.c)([F(-1), F(2)], [F(1), F(1)], "k")  # (2k - 1)/(k + 1)


def test_d1_excluded_set():
    got = {(e.value, e.reason) for e in d_curve(1).excluded}
    assert got == {
        (F(-1), CRITICAL),
        (F(-1), POLE_OF_C),
        (F(-17, 32), POLE_OF_LAMBDA),
        (F(0), CRITICAL),
        (F(2), POLE_OF_LAMBDA),
    }
    assert d_curve(1).irrational_poles.degree("k") == 2


def test_lambda_value_two_code_paths():
    assert eval_curve(d_curve(1), 4) == (F(7, 5), F(205, 9338))
    assert lambda_direct(1, F(4)) == F(205, 9338)


def test_d2_point():
    assert eval_curve(d_curve(2), F(-4, 3)) == (F(4), F(17, 441))


def test_critical_levels():
    assert critical_levels(3) == (F(-4), F(-5))


def test_eval_at_excluded_raises_with_reason():
    with pytest.raises(PoleError) as info:
        eval_curve(d_curve(2), F(-2))
    assert info.value.reason == CRITICAL


def test_table_shapes_are_integer():
    for table in (P_COEFFS, Q_COEFFS, R_COEFFS):
        assert all(isinstance(v, int) for v in table.values())


def test_normalized_curve_agrees_with_direct_formula():
    rng = random.Random(5)
    for n in range(1, 7):
        curve = d_curve(n)
        for _ in range(40):
            k = F(rng.randint(-60, 60), rng.randint(1, 9))
            if curve.is_excluded(k):
                continue
            try:
                direct = (c_direct(n, k), lambda_direct(n, k))
            except ZeroDivisionError:
                continue
            assert eval_curve(curve, k) == direct


@pytest.mark.parametrize("n", range(1, 7))
def test_implicit_equation_vanishes_on_200_points(n):
    curve = d_curve(n)
    poly = implicitize(curve)
    for t in sample_parameters(curve, 200):
        c, lam = eval_curve(curve, t)
        assert poly(c=c, **{"lambda": lam}) == 0
    # and not on an off-curve point
    c0, l0 = eval_curve(curve, sample_parameters(curve, 1)[0])
    assert poly(c=c0, **{"lambda": l0 + 1}) != 0


def test_d_curves_round_trip_byte_exact():
    text = serialize_curves([d_curve(n) for n in range(1, 5)])
    reg = load_curves(text)
    assert serialize_curves(reg) == text
    for n in range(1, 5):
        assert same_curve(reg[f"D({n})"], d_curve(n))


def _toy(name, lam_num, excluded=(), family=None):
    raw = {
        "name": name,
        "param": "t",
        "indices": {},
        "c": {"num": [[0, 1], [1, 1]], "den": [[1, 1]]},
        "lambda": {"num": lam_num, "den": [[1, 1]]},
        "excluded": list(excluded),
    }
    if family:
        raw["family"] = family
    return raw


def test_registry_lookup_and_find():
    doc = {"curves": [_toy("line", [[0, 1], [1, 1]], family="W_so_odd")]}
    doc["curves"][0]["indices"] = {"m": 3}
    reg = load_curves(json.dumps(doc))
    assert reg.find("W_so_odd", m=3).name == "line"
    assert reg.find("W_so_odd", m=4) is None
    assert "D(7)" in reg and "nope" not in reg


def test_config_missing_pole_is_named():
    raw = _toy("p", [[1, 1]])
    raw["lambda"]["den"] = [[-3, 1], [2, 1]]  # pole at 3/2
    with pytest.raises(ConfigError, match="missing declared pole 3/2 of lambda"):
        load_curves(json.dumps({"curves": [raw]}))


def test_config_bogus_pole_rejected():
    raw = _toy("p", [[1, 1]], excluded=[{"value": "5", "reason": "pole_of_c"}])
    with pytest.raises(ConfigError, match="not a pole"):
        load_curves(json.dumps({"curves": [raw]}))


@pytest.mark.parametrize(
    "mutate,match",
    [
        (lambda r: r.pop("c"), "missing fields"),
        (lambda r: r.update(extra=1), "unknown fields"),
        (lambda r: r["c"].update(num=[[1, 0]]), "zero denominator"),
        (lambda r: r["c"].update(num=[[0.5, 1]]), "integer pair"),
        (lambda r: r.update(param="c"), "identifier"),
        (lambda r: r.update(excluded=[{"value": "0.5", "reason": "critical"}]), "exact rational"),
        (lambda r: r.update(excluded=[{"value": "1", "reason": "because"}]), "must be one of"),
    ],
)
def test_config_validation(mutate, match):
    raw = _toy("p", [[1, 1]])
    mutate(raw)
    with pytest.raises(ConfigError, match=match):
        load_curves(json.dumps({"curves": [raw]}))


def test_config_duplicate_and_bad_json():
    with pytest.raises(ConfigError, match="duplicate"):
        load_curves(json.dumps({"curves": [_toy("a", [[1, 1]]), _toy("a", [[2, 1]])]}))
    with pytest.raises(ConfigError, match="invalid JSON"):
        load_curves("{not json")


def test_config_family_d_needs_critical_levels():
    raw = json.loads(serialize_curves([d_curve(2)]))["curves"][0]
    raw["excluded"] = [e for e in raw["excluded"] if e["reason"] != "critical"]
    with pytest.raises(ConfigError, match="missing critical level"):
        load_curves(json.dumps({"curves": [raw]}))


def test_config_warns_on_common_factor():
    raw = _toy("p", [[1, 1]])
    raw["c"] = {"num": [[-1, 1], [1, 1]], "den": [[-1, 1], [1, 1]]}
    raw["excluded"] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        load_curves(json.dumps({"curves": [raw]}))
    assert any(issubclass(w.category, ConfigWarning) for w in caught)


def test_fit_recovers_d_curve():
    curve = d_curve(2)
    ts = sample_parameters(curve, 40)
    pts = [(t, *eval_curve(curve, t)) for t in ts]
    fitted = fit_curve(pts, (curve.c.degrees(), curve.lam.degrees()), param="k")
    assert fitted.c == curve.c
    assert fitted.lam == curve.lam
