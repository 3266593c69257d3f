"""JSON curve-config files: loading, validation, canonical serialization.

Schema::

    {"curves": [{"name": str, "param": str, "indices": {str: int},
                 "family": str (optional, "D" or an external tag),
                 "c": {"num": [[p, q], ...], "den": [[p, q], ...]},
                 "lambda": {"num": [...], "den": [...]},
                 "excluded": [{"value": "p/q", "reason": str}, ...]}]}

Coefficient lists are ascending in degree; each coefficient is an exact
integer pair.
"""

from __future__ import annotations

import json
import re
import warnings
from collections.abc import Mapping
from fractions import Fraction
from typing import Iterable, Iterator

from ..exactalg import RatFunc, format_rational, parse_rational
from ..exactalg import upoly
from .core import (
    CRITICAL,
    POLE_OF_C,
    POLE_OF_LAMBDA,
    REASONS,
    Exclusion,
    Family,
    TruncationCurve,
    _irrational_part,
    _sort_exclusions,
    d_curve,
    rational_poles,
)
from .dfamily import critical_levels


class ConfigError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class ConfigWarning(UserWarning):
    pass


_D_NAME = re.compile(r"^D\((\d+)\)$")


class CurveRegistry(Mapping):
    """Name -> curve, fixed at construction.  ``D(n)`` names resolve to built-ins."""

    def __init__(self, curves: Iterable[TruncationCurve] = ()):
        self._curves: dict[str, TruncationCurve] = {}
        for c in curves:
            if c.name in self._curves:
                raise ConfigError(f"curves[{c.name}]", "duplicate curve name")
            self._curves[c.name] = c

    def __getitem__(self, name: str) -> TruncationCurve:
        if name in self._curves:
            return self._curves[name]
        m = _D_NAME.match(name)
        if m and int(m.group(1)) >= 1:
            return d_curve(int(m.group(1)))
        raise KeyError(name)

    def __iter__(self) -> Iterator[str]:
        return iter(self._curves)

    def __len__(self) -> int:
        return len(self._curves)

    def __contains__(self, name) -> bool:
        try:
            self[name]
        except KeyError:
            return False
        return True

    def find(self, tag: str, **indices) -> TruncationCurve | None:
        for c in self._curves.values():
            if c.family.tag == tag and all(c.family.index(k) == v for k, v in indices.items()):
                return c
        return None

    def curves(self) -> list[TruncationCurve]:
        return list(self._curves.values())


def _coeffs(raw, path: str) -> list[Fraction]:
    if not isinstance(raw, list) or not raw:
        raise ConfigError(path, "expected a nonempty list of [num, den] pairs")
    out = []
    for i, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise ConfigError(f"{path}[{i}]", "expected an integer pair [num, den]")
        if pair[1] == 0:
            raise ConfigError(f"{path}[{i}]", "zero denominator")
        out.append(Fraction(pair[0], pair[1]))
    return out


def _ratfunc(raw, path: str, param: str) -> RatFunc:
    if not isinstance(raw, dict) or set(raw) != {"num", "den"}:
        raise ConfigError(path, "expected an object with exactly 'num' and 'den'")
    num = _coeffs(raw["num"], f"{path}.num")
    den = _coeffs(raw["den"], f"{path}.den")
    if not upoly.strip(den):
        raise ConfigError(f"{path}.den", "denominator is identically zero")
    g = upoly.gcd_(upoly.strip(num), upoly.strip(den))
    if upoly.deg(g) > 0:
        warnings.warn(f"{path}: numerator and denominator share a factor; normalized", ConfigWarning)
    return RatFunc(num, den, param)


def _curve_from_dict(raw, path: str) -> TruncationCurve:
    if not isinstance(raw, dict):
        raise ConfigError(path, "expected an object")
    required = {"name", "param", "indices", "c", "lambda", "excluded"}
    missing = required - set(raw)
    if missing:
        raise ConfigError(path, f"missing fields {sorted(missing)}")
    unknown = set(raw) - required - {"family"}
    if unknown:
        raise ConfigError(path, f"unknown fields {sorted(unknown)}")
    name, param = raw["name"], raw["param"]
    if not isinstance(name, str) or not name:
        raise ConfigError(f"{path}.name", "expected a nonempty string")
    if not isinstance(param, str) or not param.isidentifier() or param in ("c", "lambda"):
        raise ConfigError(f"{path}.param", "expected an identifier other than c/lambda")
    indices = raw["indices"]
    if not isinstance(indices, dict) or not all(
        isinstance(k, str) and isinstance(v, int) and not isinstance(v, bool) for k, v in indices.items()
    ):
        raise ConfigError(f"{path}.indices", "expected an object of integer indices")
    tag = raw.get("family", "external")
    if not isinstance(tag, str) or not tag:
        raise ConfigError(f"{path}.family", "expected a nonempty string")

    c = _ratfunc(raw["c"], f"{path}.c", param)
    lam = _ratfunc(raw["lambda"], f"{path}.lambda", param)

    if not isinstance(raw["excluded"], list):
        raise ConfigError(f"{path}.excluded", "expected a list")
    declared = []
    for i, item in enumerate(raw["excluded"]):
        ipath = f"{path}.excluded[{i}]"
        if not isinstance(item, dict) or set(item) != {"value", "reason"}:
            raise ConfigError(ipath, "expected {'value': 'p/q', 'reason': str}")
        try:
            value = parse_rational(item["value"])
        except ValueError as exc:
            raise ConfigError(f"{ipath}.value", str(exc)) from None
        if item["reason"] not in REASONS:
            raise ConfigError(f"{ipath}.reason", f"must be one of {list(REASONS)}")
        declared.append(Exclusion(value, item["reason"]))

    for reason, func, label in ((POLE_OF_C, c, "c"), (POLE_OF_LAMBDA, lam, "lambda")):
        poles = set(rational_poles(func))
        claimed = {e.value for e in declared if e.reason == reason}
        for pole in sorted(poles - claimed):
            raise ConfigError(
                f"{path}.excluded",
                f"missing declared pole {format_rational(pole)} of {label}",
            )
        for value in sorted(claimed - poles):
            raise ConfigError(
                f"{path}.excluded",
                f"{format_rational(value)} is declared {reason} but is not a pole of {label}",
            )

    if tag == "D":
        n = indices.get("n")
        if not isinstance(n, int) or n < 1:
            raise ConfigError(f"{path}.indices", "family D needs an index n >= 1")
        crit = {e.value for e in declared if e.reason == CRITICAL}
        for level in critical_levels(n):
            if level not in crit:
                raise ConfigError(
                    f"{path}.excluded",
                    f"missing critical level {format_rational(level)} for family D(n={n})",
                )
        family = Family("D", "D", tuple(sorted(indices.items())))
    else:
        family = Family.external(tag, indices)

    return TruncationCurve(
        name=name,
        family=family,
        param=param,
        c=c,
        lam=lam,
        excluded=_sort_exclusions(declared),
        irrational_poles=_irrational_part(c, lam),
    )


def load_curves(config_text: str) -> CurveRegistry:
    """Parse and validate a curve-config document into a registry."""
    try:
        doc = json.loads(config_text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}", f"invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict) or set(doc) != {"curves"}:
        raise ConfigError("$", "expected an object with a single 'curves' list")
    if not isinstance(doc["curves"], list):
        raise ConfigError("curves", "expected a list")
    curves = [_curve_from_dict(raw, f"curves[{i}]") for i, raw in enumerate(doc["curves"])]
    return CurveRegistry(curves)


def _pairs(coeffs: list[Fraction]) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in coeffs]


def curve_to_dict(curve: TruncationCurve) -> dict:
    return {
        "name": curve.name,
        "param": curve.param,
        "family": curve.family.tag if curve.family.kind == "D" else (curve.family.tag or "external"),
        "indices": dict(curve.family.indices),
        "c": {"num": _pairs(curve.c.num_dense or [Fraction(0)]), "den": _pairs(curve.c.den_dense)},
        "lambda": {"num": _pairs(curve.lam.num_dense or [Fraction(0)]), "den": _pairs(curve.lam.den_dense)},
        "excluded": [{"value": format_rational(e.value), "reason": e.reason} for e in curve.excluded],
    }


def serialize_curves(curves: Iterable[TruncationCurve] | CurveRegistry) -> str:
    if isinstance(curves, CurveRegistry):
        curves = curves.curves()
    doc = {"curves": [curve_to_dict(c) for c in curves]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
