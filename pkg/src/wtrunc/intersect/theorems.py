"""Closed-form coincidence lists, transcribed as exact functions of (m, n).

Each item maps integers (m, n) to the level pair (k, l).  An expression whose
denominator vanishes at a given (m, n) raises ZeroDivisionError; callers treat
that item as degenerate there and drop it.

Three lists are held here:

* ``T41``: D_k(n) against the Z2-orbifold of W_l(so_{2m}), with printed
  c-coordinates and printed lambda expressions (including their f, g, h).
* ``T42``: D_k(n) against W_l(so_{2m+1}).
* ``T43``: D_k(m) against D_l(n), m != n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..curves.core import CRITICAL, POLE_OF_C, POLE_OF_LAMBDA

Expr = Callable[[Fraction, Fraction], Fraction]


@dataclass(frozen=True)
class LambdaBlock:
    """A printed lambda expression together with its auxiliary polynomials."""

    f: Expr
    g: Expr
    h: Expr
    value: Callable[[Fraction, Fraction, Fraction, Fraction, Fraction], Fraction]  # (m, n, f, g, h)

    def data(self, m, n) -> tuple[Fraction, Fraction, Fraction]:
        m, n = Fraction(m), Fraction(n)
        return self.f(m, n), self.g(m, n), self.h(m, n)

    def __call__(self, m, n) -> Fraction:
        m, n = Fraction(m), Fraction(n)
        return self.value(m, n, *self.data(m, n))


@dataclass(frozen=True)
class TheoremItem:
    number: int
    k: Expr
    l: Expr
    c: Expr | None = None
    lam: LambdaBlock | None = None

    def levels(self, m, n) -> tuple[Fraction, Fraction]:
        m, n = Fraction(m), Fraction(n)
        return self.k(m, n), self.l(m, n)

    def printed_c(self, m, n) -> Fraction | None:
        if self.c is None:
            return None
        return self.c(Fraction(m), Fraction(n))


@dataclass(frozen=True)
class TheoremTable:
    """One coincidence list.

    ``k_curve`` / ``l_curve`` say which index labels the D-curve carrying each
    level ("n" or "m"); ``partner`` is the registry tag of the curve carrying
    ``l`` when it is not a D-curve.  ``exempt`` lists the exclusion reasons
    the list itself sets aside: an item landing on one is skipped, any other
    excluded hit counts as a failure.
    """

    id: str
    items: tuple[TheoremItem, ...]
    k_curve: str
    l_curve: str | None
    partner: str | None
    exempt: tuple[str, ...]
    min_m: int = 1
    min_n: int = 1
    distinct: bool = False

    def in_range(self, m: int, n: int) -> bool:
        return m >= self.min_m and n >= self.min_n and not (self.distinct and m == n)

    def item(self, number: int) -> TheoremItem:
        for it in self.items:
            if it.number == number:
                return it
        raise KeyError(f"{self.id} has no item {number}")


# -- D_k(n) vs W_l(so_{2m})^{Z2} ---------------------------------------------

LAMBDA_1 = LambdaBlock(
    f=lambda m, n: (
        -28 + 94*m - 62*m**2 - 52*m**3 + 48*m**4 + 186*n - 668*m*n + 857*m**2*n - 504*m**3*n
        + 144*m**4*n - 430*n**2 + 1267*m*n**2 - 1198*m**2*n**2 + 376*m**3*n**2 + 408*n**3 - 772*m*n**3
        + 304*m**2*n**3 - 136*n**4 + 76*m*n**4
    ),
    g=lambda m, n: 10 - 19*m + 12*m**2 - 21*n + 28*m*n + 14*n**2,
    h=lambda m, n: 22 - 66*m + 44*m**2 - 66*n + 73*m*n + 20*m**2*n + 44*n**2 + 10*m*n**2,
    # as printed: g appears upstairs and downstairs, f is unused
    value=lambda m, n, f, g, h: (
        (m + n - 1) * (2*m + 2*n - 1) * g / (7 * (m - 1) * (2*m + n - 1) * (2*n - 1) * g * h)
    ),
)

# the same block with the numerator g read as f
LAMBDA_1_REPAIR = LambdaBlock(
    f=LAMBDA_1.f,
    g=LAMBDA_1.g,
    h=LAMBDA_1.h,
    value=lambda m, n, f, g, h: (
        (m + n - 1) * (2*m + 2*n - 1) * f / (7 * (m - 1) * (2*m + n - 1) * (2*n - 1) * g * h)
    ),
)

LAMBDA_2 = LambdaBlock(
    f=lambda m, n: (
        14 - 33*m - 2*m**2 + 24*m**3 + 74*n - 404*m*n + 873*m**2*n - 696*m**3*n + 144*m**4*n
        + 80*n**2 - 178*m*n**2 - 260*m**2*n**2 + 452*m**3*n**2 - 112*m**4*n**2 - 24*n**3 + 264*m*n**3
        - 348*m**2*n**3 + 256*m**3*n**3 - 64*m**4*n**3 + 72*m*n**4 - 128*m**2*n**4 - 48*m**3*n**4
        + 32*m**4*n**4
    ),
    g=lambda m, n: -10 + 19*m - 12*m**2 - 2*n + 22*m*n - 8*m**2*n - 12*n**2 - 8*m*n**2 + 8*m**2*n**2,
    h=lambda m, n: 11 - 22*m + 22*n + 15*m*n - 20*m**2*n - 10*m*n**2 + 20*m**2*n**2,
    value=lambda m, n, f, g, h: (
        (1 - 2*m + 2*n) * f / (7 * (1 - 2*m + 2*m*n) * (-1 - 2*n + 4*m*n) * g * h)
    ),
)

LAMBDA_3 = LambdaBlock(
    f=lambda m, n: (
        -34*m**3 + 19*m**4 + 68*m**2*n - 38*m**3*n - 22*m*n**2 - 185*m**2*n**2 + 302*m**3*n**2
        - 80*m**4*n**2 - 12*n**3 + 204*m*n**3 - 302*m**2*n**3 + 80*m**3*n**3 - 36*n**4 + 100*m*n**4
        - 40*m**2*n**4 - 40*m**3*n**4 + 16*m**4*n**4
    ),
    g=lambda m, n: -7*m**2 + 7*m*n - 6*n**2 - 4*m*n**2 + 4*m**2*n**2,
    h=lambda m, n: -22*m - 5*m**2 + 22*n + 5*m*n + 10*n**2 - 30*m*n**2 + 20*m**2*n**2,
    value=lambda m, n, f, g, h: (n - m) * f / (7 * (m - 1) * (2*n - 1) * (m - n + 2*m*n) * g * h),
)

T41 = TheoremTable(
    id="T41",
    items=(
        TheoremItem(
            1,
            k=lambda m, n: 2*m,
            l=lambda m, n: -(2*m - 2) + (2*n + 2*m - 2) / (2*n + 2*m - 1),
            c=lambda m, n: m*n*(4*m + 2*n - 3) / ((m + n - 1) * (2*m + 2*n - 1)),
            lam=LAMBDA_1,
        ),
        TheoremItem(
            2,
            k=lambda m, n: -(2*n - 2) - (2*n - 1) / (2*(m - 1)),
            l=lambda m, n: -(2*m - 2) + (2*m - 2*n - 1) / (2*(m - 1)),
            c=lambda m, n: -2*m*n*(3 - 4*m - 2*n + 4*m*n) / (2*m - 2*n - 1),
            lam=LAMBDA_2,
        ),
        TheoremItem(
            3,
            k=lambda m, n: -(2*n - 2) + (n - m) / m,
            l=lambda m, n: -(2*m - 2) + (m - n) / m,
            c=lambda m, n: -(2*m*n + m - 2*n) * (2*m*n - m - n) / (m - n),
            lam=LAMBDA_3,
        ),
    ),
    k_curve="n",
    l_curve=None,
    partner="W_so_even_Z2",
    exempt=(CRITICAL,),
    min_m=2,
)

# -- D_k(n) vs W_l(so_{2m+1}) ------------------------------------------------

T42 = TheoremTable(
    id="T42",
    items=(
        TheoremItem(
            1,
            k=lambda m, n: -(2*n - 2) + Fraction(1, 2) * (2*n + 2*m - 1),
            l=lambda m, n: -(2*m - 1) + (2*m + 2*n - 1) / (2*m + 2*n + 1),
        ),
        TheoremItem(
            2,
            k=lambda m, n: -(2*n - 2) + (2*n - 2*m - 1) / (2*m + 2),
            l=lambda m, n: -(2*m - 1) + (2*m - 2*n + 1) / (2*m + 2),
        ),
        TheoremItem(
            3,
            k=lambda m, n: -(2*n - 2) - n / m,
            l=lambda m, n: -(2*m - 1) + (m - n) / m,
        ),
        TheoremItem(
            4,
            k=lambda m, n: -(2*n - 2) - 2*(n - 1) / (2*m - 1),
            l=lambda m, n: -(2*m - 1) + (2*m - 1) / (2*m - 2*n + 1),
        ),
        TheoremItem(
            5,
            k=lambda m, n: -(2*n - 2) + 2*(n - m - 1) / (2*m + 1),
            l=lambda m, n: -(2*m - 1) + (2*m + 1) / (2*(m - n + 1)),
        ),
    ),
    k_curve="n",
    l_curve=None,
    partner="W_so_odd",
    exempt=(CRITICAL,),
    min_m=2,
)

# -- D_k(m) vs D_l(n) --------------------------------------------------------

T43 = TheoremTable(
    id="T43",
    items=(
        TheoremItem(
            1,
            k=lambda m, n: -(2*m - 2) + 2*(m - 1) / (1 + 2*n),
            l=lambda m, n: -(2*n - 2) - (2*m + 2*n - 1) / (2*(m - 1)),
        ),
        TheoremItem(
            2,
            k=lambda m, n: -(2*m - 2) - (2*m + 2*n - 1) / (2*(n - 1)),
            l=lambda m, n: -(2*n - 2) + 2*(n - 1) / (1 + 2*m),
        ),
    ),
    k_curve="m",
    l_curve="n",
    partner=None,
    exempt=(POLE_OF_C, POLE_OF_LAMBDA),
    distinct=True,
)

TABLES = {t.id: t for t in (T41, T42, T43)}


def specialize(item: TheoremItem, m: int, n: int) -> tuple[Fraction, Fraction] | None:
    """(k, l) at integer (m, n), or None where the printed expressions degenerate."""
    try:
        return item.levels(m, n)
    except ZeroDivisionError:
        return None


def expected_self_coincidences(m: int, n: int) -> list[tuple[Fraction, Fraction]]:
    """The (k, l) pairs the D(m) x D(n) list predicts, degenerate items dropped."""
    out = []
    for item in T43.items:
        kl = specialize(item, m, n)
        if kl is not None and kl not in out:
            out.append(kl)
    return sorted(out)
