"""Curve intersections by elimination, with exclusion labelling."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..curves import TruncationCurve, d_curve, raw_point
from ..curves.core import CRITICAL
from ..exactalg import Branch, MPoly, RootReport, find_roots, gcd_mod, resultant
from ..exactalg import upoly
from ..exactalg.residue import tpoly_from_mpoly

DEGENERATE_C = (Fraction(1, 2), Fraction(-24))

NONTRIVIAL = "nontrivial"
DEGENERATE = "degenerate_c"
EXCLUDED_POLE = "excluded_pole"
CRITICAL_LEVEL = "critical_level"

_S, _T = "s", "t"


class DegenerateOverlap(ValueError):
    """The two curves share a component, so the intersection is not finite."""


@dataclass(frozen=True)
class IntersectionPoint:
    preimage_a: Fraction
    preimage_b: Fraction
    c: Fraction | None
    lam: Fraction | None
    certified: bool


@dataclass(frozen=True)
class ResidualCertificate:
    """What remains of R(s) after removing rational roots and poles of curve A.

    ``branches`` holds, for each separated factor of that residual, the
    degree of gcd_t(F(s, t), G(s, t)) over the residue field; all zero means
    no intersection point has an irrational preimage on curve A.
    ``branch_c[i]`` is c_A on branch i when it is rational there, else None.
    """

    residual: MPoly
    pole_free_residual: MPoly
    branches: tuple[Branch, ...]
    unresolved: tuple[tuple[Fraction, MPoly], ...] = ()
    branch_c: tuple[Fraction | None, ...] = ()

    @property
    def constant_gcd(self) -> bool:
        return all(b.gcd_degree == 0 for b in self.branches) and not self.unresolved

    def unexplained(self) -> list[Branch]:
        """Branches carrying irrational intersection points away from degenerate c."""
        return [
            b for b, c in zip(self.branches, self.branch_c)
            if b.gcd_degree > 0 and c not in DEGENERATE_C
        ]

    @property
    def complete(self) -> bool:
        """No intersection point escapes the rational list except at degenerate c."""
        return not self.unexplained() and not self.unresolved


@dataclass(frozen=True)
class IntersectionResult:
    curve_a: str
    curve_b: str
    points: tuple[IntersectionPoint, ...]
    eliminant: MPoly
    roots: RootReport
    certificate: ResidualCertificate


@dataclass(frozen=True)
class CoincidenceRecord:
    curve_a: str
    curve_b: str
    k: Fraction
    l: Fraction
    c: Fraction | None
    lam: Fraction | None
    status: str
    certified: bool = field(default=False)


def cleared_system(a: TruncationCurve, b: TruncationCurve) -> tuple[MPoly, MPoly]:
    """Denominator-free F(s, t), G(s, t) whose common zeros contain the intersection."""
    vs = (_S, _T)

    def on(poly, curve, var):
        return poly.rename({curve.param: var}).with_variables(vs)

    f = on(a.c.num, a, _S) * on(b.c.den, b, _T) - on(b.c.num, b, _T) * on(a.c.den, a, _S)
    g = on(a.lam.num, a, _S) * on(b.lam.den, b, _T) - on(b.lam.num, b, _T) * on(a.lam.den, a, _S)
    return f, g


def _remove_shared(residual: list, other: list) -> list:
    while upoly.deg(residual) > 0:
        g = upoly.gcd_(residual, other)
        if upoly.deg(g) < 1:
            break
        residual = upoly.exact_div(residual, g)
    return residual


def intersect_curves(a: TruncationCurve, b: TruncationCurve) -> IntersectionResult:
    """All intersection points with rational preimages, plus a completeness certificate."""
    f, g = cleared_system(a, b)
    eliminant = resultant(f, g, _T).with_variables((_S,))
    if eliminant.is_zero():
        raise DegenerateOverlap(f"curves {a.name} and {b.name} share a component")
    if eliminant.is_constant():
        roots = RootReport(_S, (), MPoly.const(1, (_S,)), ())
    else:
        roots = find_roots(eliminant)

    points: list[IntersectionPoint] = []
    unresolved: list[tuple[Fraction, MPoly]] = []
    for s in roots.roots:
        fs = f.subs({_S: s}).with_variables((_T,)).to_dense(_T)
        gs = g.subs({_S: s}).with_variables((_T,)).to_dense(_T)
        common = upoly.gcd_(fs, gs)
        if upoly.deg(common) < 1:
            continue  # R(s) = 0 only through the leading coefficients: a point at t = oo
        partner = find_roots(MPoly.from_dense(common, _T))
        for t in partner.roots:
            points.append(_make_point(a, b, s, t))
        if partner.residual.degree(_T) >= 1 and not a.is_excluded(s):
            unresolved.append((s, partner.residual))

    residual = roots.residual.to_dense(_S) if roots.residual.terms else [Fraction(1)]
    residual = upoly.squarefree_part(residual) if upoly.deg(residual) > 0 else [Fraction(1)]
    poles_a = upoly.mul(a.c.den.to_dense(a.c.var), a.lam.den.to_dense(a.lam.var))
    pole_free = _remove_shared(residual, poles_a)
    branches: tuple[Branch, ...] = ()
    if upoly.deg(pole_free) > 0:
        branches = tuple(gcd_mod(tpoly_from_mpoly(f, _S, _T), tpoly_from_mpoly(g, _S, _T), pole_free))
    cert = ResidualCertificate(
        residual=MPoly.from_dense(upoly.primitive_int(residual), _S),
        pole_free_residual=MPoly.from_dense(upoly.primitive_int(pole_free), _S),
        branches=branches,
        unresolved=tuple(unresolved),
        branch_c=tuple(_value_on_branch(a.c, br) for br in branches),
    )
    points.sort(key=lambda p: (p.preimage_a, p.preimage_b))
    return IntersectionResult(a.name, b.name, tuple(points), eliminant, roots, cert)


def _value_on_branch(f, branch: Branch) -> Fraction | None:
    """f(s) in Q[s]/(modulus) when it reduces to a rational constant."""
    m = list(branch.modulus)
    num = upoly.rem(f.num.to_dense(f.var), m)
    den = upoly.rem(f.den.to_dense(f.var), m)
    g, inv, _ = upoly.xgcd(den, m)
    if upoly.deg(g) > 0:
        return None
    val = upoly.rem(upoly.mul(num, inv), m)
    if upoly.deg(val) > 0:
        return None
    return val[0] if val else Fraction(0)


def _make_point(a: TruncationCurve, b: TruncationCurve, s: Fraction, t: Fraction) -> IntersectionPoint:
    ca, la = raw_point(a, s)
    cb, lb = raw_point(b, t)
    c = ca if ca is not None else cb
    lam = la if la is not None else lb
    certified = (
        not a.is_excluded(s)
        and not b.is_excluded(t)
        and None not in (ca, la, cb, lb)
        and (ca, la) == (cb, lb)
    )
    return IntersectionPoint(s, t, c, lam, certified)


def status_of(point: IntersectionPoint, a: TruncationCurve, b: TruncationCurve) -> str:
    reasons = a.reasons_at(point.preimage_a) + b.reasons_at(point.preimage_b)
    if CRITICAL in reasons:
        return CRITICAL_LEVEL
    if reasons:
        return EXCLUDED_POLE
    if point.c in DEGENERATE_C:
        return DEGENERATE
    return NONTRIVIAL


def filter_points(points, a: TruncationCurve, b: TruncationCurve) -> list[CoincidenceRecord]:
    """Label every point; nothing is dropped."""
    return [
        CoincidenceRecord(
            curve_a=a.name,
            curve_b=b.name,
            k=p.preimage_a,
            l=p.preimage_b,
            c=p.c,
            lam=p.lam,
            status=status_of(p, a, b),
            certified=p.certified,
        )
        for p in points
    ]


@dataclass(frozen=True)
class SelfClassification:
    m: int
    n: int
    records: tuple[CoincidenceRecord, ...]
    certificate: ResidualCertificate

    @property
    def nontrivial(self) -> list[CoincidenceRecord]:
        return [r for r in self.records if r.status == NONTRIVIAL]


def classify_pair(m: int, n: int) -> SelfClassification:
    if m == n:
        raise ValueError("classify_self needs m != n")
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    a, b = d_curve(m), d_curve(n)
    result = intersect_curves(a, b)
    return SelfClassification(m, n, tuple(filter_points(result.points, a, b)), result.certificate)


def classify_self(m: int, n: int) -> list[CoincidenceRecord]:
    """Nontrivial coincidences D_k(m) = D_l(n) found on the curve intersection."""
    return classify_pair(m, n).nontrivial
