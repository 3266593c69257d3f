"""Invariant dimensions by explicit linear algebra, independent of torus integration.

Bosons b_{i,-j} (i = 1..2n, j >= 1) are rewritten in a Witt basis
e_1..e_n, f_1..f_n of the standard representation, where the invariant form
is sum e_i f_i.  Torus weights are then diagonal, so invariants live in the
zero-weight span of monomials.  On that span we impose:

* every root vector of so(2n), acting on each mode as a derivation
  (together with the torus these span the rotation generators over C);
* the reflection swapping e_n and f_n, which generates O(2n) / SO(2n).

The dimension of the common solution space is the number of invariants.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations

DEFAULT_BASIS_GUARD = 100_000


class OracleTooLarge(MemoryError):
    def __init__(self, size: int, guard: int):
        super().__init__(f"weight space has {size} monomials, guard is {guard}")
        self.size = size
        self.guard = guard


def _partitions(d: int, max_part: int | None = None):
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    for p in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - p, p):
            yield (p,) + rest


def _multisets(labels: int, depths: tuple[int, ...]):
    """Assign a label to each part; parts of equal depth get nondecreasing labels."""
    if not depths:
        yield ()
        return
    first = depths[0]
    run = 1
    while run < len(depths) and depths[run] == first:
        run += 1

    def runs(k, lo):
        if k == 0:
            yield ()
            return
        for a in range(lo, labels):
            for rest in runs(k - 1, a):
                yield (a,) + rest

    for head in runs(run, 0):
        for tail in _multisets(labels, depths[run:]):
            yield tuple((first, a) for a in head) + tail


def zero_weight_monomials(n: int, d: int, guard: int = DEFAULT_BASIS_GUARD) -> list[tuple]:
    """Sorted tuples of (depth, label) with label a in 0..2n-1; a < n is e_a, a >= n is f_{a-n}."""
    out = []
    for parts in _partitions(d):
        for mono in _multisets(2 * n, parts):
            weight = [0] * n
            for _, a in mono:
                if a < n:
                    weight[a] += 1
                else:
                    weight[a - n] -= 1
            if not any(weight):
                out.append(tuple(sorted(mono)))
                if len(out) > guard:
                    raise OracleTooLarge(len(out), guard)
    return sorted(set(out))


def root_vectors(n: int) -> list[dict[int, tuple[int, int]]]:
    """Each root vector as label -> (coefficient, image label) on the standard representation."""
    e = list(range(n))
    f = [n + i for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append({e[j]: (1, e[i]), f[i]: (-1, f[j])})  # e_i - e_j
    for i, j in combinations(range(n), 2):
        out.append({f[j]: (1, e[i]), f[i]: (-1, e[j])})  # e_i + e_j
        out.append({e[j]: (1, f[i]), e[i]: (-1, f[j])})  # -(e_i + e_j)
    return out


def _apply_derivation(mono: tuple, action) -> dict[tuple, int]:
    out: dict = defaultdict(int)
    for pos, (depth, label) in enumerate(mono):
        if pos and mono[pos - 1] == (depth, label):
            continue  # each distinct factor once, times its multiplicity
        if label not in action:
            continue
        mult = mono.count((depth, label))
        coeff, image = action[label]
        lst = list(mono)
        lst[pos] = (depth, image)
        out[tuple(sorted(lst))] += coeff * mult
    return out


def _reflect(mono: tuple, n: int) -> tuple:
    a, b = n - 1, 2 * n - 1
    swap = {a: b, b: a}
    return tuple(sorted((d, swap.get(x, x)) for d, x in mono))


def _rank(rows: list[dict[int, int]]) -> int:
    """Exact rank of sparse integer rows."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            col = min(r)
            if col not in pivots:
                lead = r[col]
                pivots[col] = {k: v / lead for k, v in r.items()}
                rank += 1
                break
            factor = r[col]
            for k, v in pivots[col].items():
                nv = r.get(k, 0) - factor * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def brute_force_dim(n: int, d: int, guard: int = DEFAULT_BASIS_GUARD) -> int:
    """Number of O(2n)-invariant polynomials of weight d in the boson modes."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    basis = zero_weight_monomials(n, d, guard)
    if not basis:
        return 0
    index = {m: i for i, m in enumerate(basis)}
    rows: list[dict[int, int]] = []
    for action in root_vectors(n):
        # image lands in a nonzero weight space; one row per target monomial
        targets: dict[tuple, dict[int, int]] = defaultdict(dict)
        for i, mono in enumerate(basis):
            for tgt, c in _apply_derivation(mono, action).items():
                if c:
                    targets[tgt][i] = c
        rows.extend(targets.values())
    for i, mono in enumerate(basis):
        j = index[_reflect(mono, n)]
        if j != i:
            rows.append({i: 1, j: -1})
    return len(basis) - _rank(rows)
