"""Truncation curves: rational parametrizations t -> (c(t), lambda(t))."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..exactalg import MPoly, PoleError, RatFunc, as_scalar, find_roots
from . import dfamily

CRITICAL = "critical"
POLE_OF_C = "pole_of_c"
POLE_OF_LAMBDA = "pole_of_lambda"
REASONS = (CRITICAL, POLE_OF_C, POLE_OF_LAMBDA)


@dataclass(frozen=True)
class Family:
    kind: str  # "D" or "EXTERNAL"
    tag: str = ""
    indices: tuple[tuple[str, int], ...] = ()

    @classmethod
    def d(cls, n: int) -> "Family":
        return cls("D", "D", (("n", n),))

    @classmethod
    def external(cls, tag: str, indices: Mapping[str, int] | None = None) -> "Family":
        return cls("EXTERNAL", tag, tuple(sorted((indices or {}).items())))

    def index(self, key: str) -> int | None:
        return dict(self.indices).get(key)


@dataclass(frozen=True)
class Exclusion:
    value: Fraction
    reason: str

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown exclusion reason {self.reason!r}")


def _sort_exclusions(items) -> tuple[Exclusion, ...]:
    uniq = {(e.value, e.reason) for e in items}
    return tuple(Exclusion(v, r) for v, r in sorted(uniq, key=lambda p: (p[0], REASONS.index(p[1]))))


@dataclass(frozen=True)
class TruncationCurve:
    name: str
    family: Family
    param: str
    c: RatFunc
    lam: RatFunc
    excluded: tuple[Exclusion, ...]
    # product of the non-rational parts of both denominators; its roots are
    # irrational poles, which rational parameters can never hit
    irrational_poles: MPoly = field(default=None, compare=False)

    def reasons_at(self, t) -> tuple[str, ...]:
        t = as_scalar(t)
        return tuple(e.reason for e in self.excluded if e.value == t)

    def is_excluded(self, t) -> bool:
        return bool(self.reasons_at(t))

    def excluded_values(self) -> list[Fraction]:
        return sorted({e.value for e in self.excluded})


def rational_poles(f: RatFunc) -> list[Fraction]:
    if f.den.degree(f.var) < 1:
        return []
    return find_roots(f.den).roots


def _irrational_part(*funcs: RatFunc) -> MPoly:
    var = funcs[0].var
    prod = MPoly.const(1, (var,))
    for f in funcs:
        if f.den.degree(var) >= 1:
            prod = prod * find_roots(f.den).residual
    return prod.primitive()


def make_curve(
    name: str,
    family: Family,
    c: RatFunc,
    lam: RatFunc,
    critical: tuple = (),
    extra: tuple[Exclusion, ...] = (),
) -> TruncationCurve:
    """Build a curve whose excluded set is the critical values plus all rational poles."""
    if c.var != lam.var:
        raise ValueError("c and lambda must share one parameter")
    items = [Exclusion(as_scalar(v), CRITICAL) for v in critical]
    items += [Exclusion(v, POLE_OF_C) for v in rational_poles(c)]
    items += [Exclusion(v, POLE_OF_LAMBDA) for v in rational_poles(lam)]
    items += list(extra)
    return TruncationCurve(
        name=name,
        family=family,
        param=c.var,
        c=c,
        lam=lam,
        excluded=_sort_exclusions(items),
        irrational_poles=_irrational_part(c, lam),
    )


def d_curve(n: int, param: str = "k") -> TruncationCurve:
    """Truncation curve of D^k(n), parametrized by the level."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"d_curve needs an integer n >= 1, got {n!r}")
    k = MPoly.var(param)
    c_num = k * n * (2 * k + 2 * n - 3)
    c_den = (k + 2 * n - 2) * (k + 2 * n - 1)
    p = dfamily.specialize(dfamily.p_poly(), n, param)
    q = dfamily.specialize(dfamily.q_poly(), n, param)
    r = dfamily.specialize(dfamily.r_poly(), n, param)
    lam_num = (k + 2 * n - 2) * (k + 2 * n - 1) * p
    lam_den = 7 * (k - 2) * (k + n - 1) * (2 * n - 1) * q * r
    return make_curve(
        f"D({n})",
        Family.d(n),
        RatFunc(c_num, c_den, param),
        RatFunc(lam_num, lam_den, param),
        critical=dfamily.critical_levels(n),
    )


def eval_curve(curve: TruncationCurve, t) -> tuple[Fraction, Fraction]:
    """Exact point (c, lambda) at parameter ``t``; PoleError if ``t`` is excluded."""
    t = as_scalar(t)
    reasons = curve.reasons_at(t)
    if reasons:
        raise PoleError(t, reasons[0])
    return curve.c(t), curve.lam(t)


def raw_point(curve: TruncationCurve, t) -> tuple[Fraction | None, Fraction | None]:
    """(c, lambda) where the normalized functions are finite, ignoring exclusions."""
    out = []
    for f in (curve.c, curve.lam):
        try:
            out.append(f(t))
        except ZeroDivisionError:
            out.append(None)
    return out[0], out[1]


def same_curve(a: TruncationCurve, b: TruncationCurve) -> bool:
    return (
        a.param == b.param
        and a.c == b.c
        and a.lam == b.lam
        and a.excluded == b.excluded
    )
