"""Checking the closed-form coincidence lists against the curves.

Reports follow one schema::

    {"theorem": str, "item": int, "m": int, "n": int,
     "checks": [{"name": str, "status": "pass|fail|skipped",
                 "lhs": "p/q" or null, "rhs": "p/q" or null}]}

Item 0 of T43 is the completeness row for the whole (m, n) cell.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from ..curves import TruncationCurve, d_curve
from ..curves.dfamily import lambda_direct
from ..exactalg import format_rational
from .core import NONTRIVIAL, classify_pair
from .theorems import LAMBDA_1_REPAIR, T41, TheoremItem, TheoremTable, expected_self_coincidences, specialize

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _fmt(x) -> str | None:
    return None if x is None else format_rational(Fraction(x))


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    lhs: str | None = None
    rhs: str | None = None

    @classmethod
    def compare(cls, name: str, lhs, rhs) -> "Check":
        return cls(name, PASS if lhs == rhs else FAIL, _fmt(lhs), _fmt(rhs))

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    item: int
    m: int
    n: int
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def key(self) -> tuple:
        return (self.theorem, self.item, self.m, self.n)

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    def status_of(self, name: str) -> str | None:
        for c in self.checks:
            if c.name == name:
                return c.status
        return None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "item": self.item,
            "m": self.m,
            "n": self.n,
            "checks": [c.to_dict() for c in self.checks],
        }


def _value_or_none(f, t):
    try:
        return f(t)
    except ZeroDivisionError:
        return None


def _exclusion_check(name: str, curve: TruncationCurve, t: Fraction, exempt) -> Check:
    reasons = curve.reasons_at(t)
    if not reasons:
        return Check(name, PASS, _fmt(t), None)
    status = SKIPPED if any(r in exempt for r in reasons) else FAIL
    return Check(name, status, _fmt(t), None)


def _pair_check(name: str, lhs, rhs, skip: bool) -> Check:
    if skip:
        return Check(name, SKIPPED, _fmt(lhs), _fmt(rhs))
    if lhs is None or rhs is None:
        return Check(name, FAIL, _fmt(lhs), _fmt(rhs))
    return Check.compare(name, lhs, rhs)


def _curve_index(table: TheoremTable, which: str, m: int, n: int) -> int:
    return m if which == "m" else n


def _partner(table: TheoremTable, m: int, n: int, registry: Mapping | None) -> TruncationCurve | None:
    if table.l_curve is not None:
        return d_curve(_curve_index(table, table.l_curve, m, n))
    if registry is None or not hasattr(registry, "find"):
        return None
    return registry.find(table.partner, m=m)


def _verify_item(table: TheoremTable, item: TheoremItem, m: int, n: int, registry) -> VerificationReport:
    kl = specialize(item, m, n)
    if kl is None:
        return VerificationReport(table.id, item.number, m, n, (Check("specialize", SKIPPED),))
    k, l = kl
    checks = [Check("specialize", PASS, _fmt(k), _fmt(l))]

    own = d_curve(_curve_index(table, table.k_curve, m, n))
    excl = _exclusion_check("k_not_excluded", own, k, table.exempt)
    checks.append(excl)
    k_out = excl.status != PASS

    if item.c is not None:
        try:
            printed = item.printed_c(m, n)
        except ZeroDivisionError:
            printed = None
        skip = k_out or printed is None
        checks.append(_pair_check("printed_c", _value_or_none(own.c, k), printed, skip))

    partner = _partner(table, m, n, registry)
    if partner is None:
        checks.append(Check("partner_c", SKIPPED))
        checks.append(Check("partner_lambda", SKIPPED))
    else:
        pexcl = _exclusion_check("l_not_excluded", partner, l, table.exempt)
        checks.append(pexcl)
        skip = k_out or pexcl.status != PASS
        checks.append(_pair_check("partner_c", _value_or_none(own.c, k), _value_or_none(partner.c, l), skip))
        checks.append(
            _pair_check("partner_lambda", _value_or_none(own.lam, k), _value_or_none(partner.lam, l), skip)
        )
    return VerificationReport(table.id, item.number, m, n, tuple(checks))


def verify_theorem(table: TheoremTable, m: int, n: int, registry=None) -> list[VerificationReport]:
    """One report per list item at (m, n)."""
    if not table.in_range(m, n):
        raise ValueError(f"(m, n) = ({m}, {n}) is outside the range of {table.id}")
    return [_verify_item(table, item, m, n, registry) for item in table.items]


def completeness_report(m: int, n: int) -> VerificationReport:
    """Compare the nontrivial D(m) x D(n) intersections with the closed-form list."""
    result = classify_pair(m, n)
    found = {(r.k, r.l): r for r in result.records if r.status == NONTRIVIAL}
    expected = expected_self_coincidences(m, n)
    checks = []
    for k, l in expected:
        rec = found.get((k, l))
        ok = rec is not None and rec.certified
        checks.append(Check("listed_found", PASS if ok else FAIL, _fmt(k), _fmt(l)))
    extras = sorted(kl for kl in found if kl not in expected)
    for k, l in extras:
        checks.append(Check("unlisted_nontrivial", FAIL, _fmt(k), _fmt(l)))
    if not extras:
        checks.append(Check("unlisted_nontrivial", PASS))
    cert = result.certificate
    checks.append(Check("residual_gcd_constant", PASS if cert.constant_gcd else FAIL))
    checks.append(Check("residual_complete", PASS if cert.complete else FAIL))
    return VerificationReport("T43", 0, m, n, tuple(checks))


# -- lambda reconciliation ----------------------------------------------------


@dataclass(frozen=True)
class LambdaComparison:
    item: int
    k: Fraction | None
    curve_value: Fraction | None  # lambda_n(k) from the curve; None at a pole
    second_path: Fraction | None  # the same value by unsimplified substitution
    f: Fraction | None
    g: Fraction | None
    h: Fraction | None
    printed: Fraction | None
    repair: Fraction | None = None  # item 1 only

    @staticmethod
    def _ratio(a, b):
        if a is None or b is None or b == 0:
            return None
        return a / b

    @property
    def printed_agrees(self) -> bool | None:
        if self.curve_value is None or self.printed is None:
            return None
        return self.curve_value == self.printed

    @property
    def printed_ratio(self) -> Fraction | None:
        return self._ratio(self.curve_value, self.printed)

    @property
    def repair_agrees(self) -> bool | None:
        if self.curve_value is None or self.repair is None:
            return None
        return self.curve_value == self.repair

    @property
    def repair_ratio(self) -> Fraction | None:
        return self._ratio(self.curve_value, self.repair)


def _agreement(name: str, lhs, rhs) -> Check:
    if lhs is None or rhs is None:
        return Check(name, SKIPPED, _fmt(lhs), _fmt(rhs))
    return Check.compare(name, lhs, rhs)


@dataclass(frozen=True)
class ReconciliationReport:
    m: int
    n: int
    items: tuple[LambdaComparison, ...]

    def item(self, number: int) -> LambdaComparison:
        return next(it for it in self.items if it.item == number)

    def to_dicts(self) -> list[dict]:
        out = []
        for it in self.items:
            checks = [
                _agreement("second_path", it.curve_value, it.second_path),
                _agreement("printed_lambda", it.curve_value, it.printed),
            ]
            if it.item == 1:
                checks.append(_agreement("f_repair", it.curve_value, it.repair))
            out.append({
                "theorem": "T41-lambda",
                "item": it.item,
                "m": self.m,
                "n": self.n,
                "checks": [c.to_dict() for c in checks],
                "f": _fmt(it.f),
                "g": _fmt(it.g),
                "h": _fmt(it.h),
                "printed_ratio": _fmt(it.printed_ratio),
                "repair_ratio": _fmt(it.repair_ratio),
            })
        return out


def _safe(fn, *args):
    try:
        return fn(*args)
    except ZeroDivisionError:
        return None


def reconcile_lambda(m: int, n: int) -> ReconciliationReport:
    """Evaluate lambda_n at the three T41 levels and set it beside the printed blocks.

    Nothing is corrected: disagreements are reported with their exact ratio.
    """
    if m < 2 or n < 1:
        raise ValueError("reconcile_lambda needs m >= 2, n >= 1")
    curve = d_curve(n)
    items = []
    for item in T41.items:
        k = _safe(item.k, Fraction(m), Fraction(n))
        value = second = None
        if k is not None and not curve.is_excluded(k):
            value = _safe(curve.lam, k)
            second = _safe(lambda_direct, n, k)
        f = g = h = None
        if item.lam is not None:
            f, g, h = item.lam.data(m, n)
        items.append(LambdaComparison(
            item=item.number,
            k=k,
            curve_value=value,
            second_path=second,
            f=f,
            g=g,
            h=h,
            printed=_safe(item.lam, m, n),
            repair=_safe(LAMBDA_1_REPAIR, m, n) if item.number == 1 else None,
        ))
    return ReconciliationReport(m, n, tuple(items))


# -- serialization ------------------------------------------------------------


def sort_reports(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: r.key)


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    doc = [r.to_dict() for r in sort_reports(reports)]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theorem", "item", "m", "n", "check", "status", "lhs", "rhs"])
    for r in sort_reports(reports):
        for c in r.checks:
            w.writerow([r.theorem, r.item, r.m, r.n, c.name, c.status, c.lhs or "", c.rhs or ""])
    return buf.getvalue()


def reports_from_json(text: str) -> list[VerificationReport]:
    out = []
    for d in json.loads(text):
        checks = tuple(Check(c["name"], c["status"], c["lhs"], c["rhs"]) for c in d["checks"])
        out.append(VerificationReport(d["theorem"], d["item"], d["m"], d["n"], checks))
    return out
