"""O(2n)-invariant characters of 2n free bosons by torus integration.

The Fock space of 2n bosons is the symmetric algebra on V q + V q^2 + ...,
V the standard representation.  For a group element with eigenvalues x on V
its trace is prod_d prod_x 1/(1 - x q^d).  Averaging over O(2n) splits into
the two components:

* SO(2n): eigenvalues z_i^(+-1), i = 1..n, density from the D_n positive
  roots e_i - e_j, e_i + e_j.
* the other component: eigenvalues z_i^(+-1), i = 1..n-1, plus +1 and -1,
  density from the C_{n-1} positive roots e_i - e_j, e_i + e_j, 2 e_i.

For a Weyl-invariant integrand f the Haar average is the constant term of
f * prod_{a > 0} (1 - z^a).  The invariant character is the mean of the two
component averages.
"""

from __future__ import annotations

import os
from collections import defaultdict
from itertools import combinations

from .series import QSeries

DEFAULT_TERM_BUDGET = 20_000_000
BUDGET_ENV = "WTRUNC_TERM_BUDGET"


class CharacterBudgetError(MemoryError):
    """The truncated Laurent intermediate outgrew the configured term budget."""

    def __init__(self, used: int, budget: int, partial: QSeries | None = None):
        super().__init__(f"term budget exceeded: {used} > {budget} (set {BUDGET_ENV} to raise it)")
        self.used = used
        self.budget = budget
        self.partial = partial


def term_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_TERM_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def _unit(i: int, rank: int, sign: int = 1) -> tuple[int, ...]:
    v = [0] * rank
    v[i] = sign
    return tuple(v)


def positive_roots(kind: str, rank: int) -> list[tuple[int, ...]]:
    """Positive roots of D_rank or C_rank as exponent vectors."""
    roots = []
    for i, j in combinations(range(rank), 2):
        a = [0] * rank
        a[i], a[j] = 1, -1
        roots.append(tuple(a))
        b = [0] * rank
        b[i], b[j] = 1, 1
        roots.append(tuple(b))
    if kind == "C":
        roots += [tuple(2 if t == i else 0 for t in range(rank)) for i in range(rank)]
    elif kind != "D":
        raise ValueError(f"unknown root system {kind!r}")
    return roots


def weyl_density(kind: str, rank: int) -> dict[tuple[int, ...], int]:
    """Expanded prod over positive roots a of (1 - z^a)."""
    poly = {(0,) * rank: 1}
    for a in positive_roots(kind, rank):
        nxt: dict = defaultdict(int)
        for e, c in poly.items():
            nxt[e] += c
            nxt[tuple(x + y for x, y in zip(e, a))] -= c
        poly = {e: c for e, c in nxt.items() if c}
    return poly


def _component_average(rank: int, scalar_eigs: tuple[int, ...], density, N: int, budget: int) -> list[int]:
    """Constant term of density * prod_d 1/(1 - x q^d) over the component's eigenvalues.

    ``scalar_eigs`` are the eigenvalues (+-1) not carried by the torus.
    """
    reach = max((sum(abs(x) for x in e) for e in density), default=0)
    zero = (0,) * rank
    # per-weight buckets of Laurent polynomials in z_1..z_rank
    f: list[dict] = [defaultdict(int) for _ in range(N + 1)]
    f[0][zero] = 1

    # scalar eigenvalues only rescale q-weights, so fold them in first
    for d in range(1, N + 1):
        for x in scalar_eigs:
            for w in range(d, N + 1):
                c = f[w - d].get(zero, 0)
                if c:
                    f[w][zero] += x * c

    shifts = [_unit(i, rank, s) for i in range(rank) for s in (1, -1)]
    used = 0
    for d in range(1, N + 1):
        for v in shifts:
            for w in range(d, N + 1):
                slack = reach + (N - w)
                src = f[w - d]
                dst = f[w]
                for e, c in list(src.items()):
                    t = tuple(a + b for a, b in zip(e, v))
                    if sum(abs(a) for a in t) <= slack:
                        dst[t] += c
                used += len(src)
            size = sum(len(b) for b in f)
            if size > budget or used > 50 * budget:
                raise CharacterBudgetError(max(size, used // 50), budget)

    out = []
    for w in range(N + 1):
        bucket = f[w]
        out.append(sum(c * bucket.get(tuple(-x for x in e), 0) for e, c in density.items()))
    return out


def orbifold_character(n: int, N: int, budget: int | None = None) -> QSeries:
    """Graded dimension of the O(2n)-invariants in the Fock space of 2n bosons, to q^N."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if N < 0:
        raise ValueError("truncation must be >= 0")
    budget = term_budget() if budget is None else budget
    plus = _component_average(n, (), weyl_density("D", n), N, budget)
    minus = _component_average(n - 1, (1, -1), weyl_density("C", n - 1), N, budget)
    coeffs = []
    for a, b in zip(plus, minus):
        if (a + b) % 2:
            raise ArithmeticError("component averages have odd sum; density mismatch")
        coeffs.append((a + b) // 2)
    return QSeries(coeffs)
