"""Truncated q-series and free characters of graded generator profiles."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence


class TruncationMismatch(ValueError):
    pass


@dataclass(frozen=True)
class QSeries:
    """Integer coefficients of q^0 .. q^N."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a QSeries holds at least the q^0 coefficient")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, w: int) -> int:
        return self.coefficients[w]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, N: int) -> "QSeries":
        if N > self.truncation:
            raise TruncationMismatch(f"cannot extend a series known to q^{self.truncation}")
        return QSeries(self.coefficients[: N + 1])

    def to_rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.coefficients))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "coefficient"])
        w.writerows(self.to_rows())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"truncation": self.truncation, "coefficients": list(self.coefficients)}) + "\n"


@dataclass(frozen=True)
class GeneratorProfile:
    """Weights of strong generators: an explicit list, or every even weight >= 2."""

    weights: tuple[int, ...] = ()
    all_even: bool = False

    def __post_init__(self):
        if self.all_even and self.weights:
            raise ValueError("give either explicit weights or all_even, not both")
        if any(not isinstance(w, int) or w < 1 for w in self.weights):
            raise ValueError("generator weights must be positive integers")
        object.__setattr__(self, "weights", tuple(sorted(self.weights)))

    @classmethod
    def of(cls, *weights: int) -> "GeneratorProfile":
        return cls(tuple(weights))

    @classmethod
    def even(cls, top: int | None = None) -> "GeneratorProfile":
        """W(2, 4, ..., top), or all even weights when ``top`` is None."""
        if top is None:
            return cls(all_even=True)
        return cls(tuple(range(2, top + 1, 2)))

    def upto(self, N: int) -> list[int]:
        if self.all_even:
            return list(range(2, N + 1, 2))
        return [w for w in self.weights if w <= N]


def _divide_geometric(coeffs: list[int], start: int, N: int) -> None:
    # in place: coeffs *= 1 / (1 - q^start)
    for w in range(start, N + 1):
        coeffs[w] += coeffs[w - start]


def free_character(profile: GeneratorProfile, N: int) -> QSeries:
    """Character of the free algebra: a generator of weight w has one mode in each weight >= w."""
    if N < 0:
        raise ValueError("truncation must be >= 0")
    coeffs = [1] + [0] * N
    for w in profile.upto(N):
        for j in range(w, N + 1):
            _divide_geometric(coeffs, j, N)
    return QSeries(coeffs)


def fock_character(bosons: int, N: int) -> QSeries:
    """prod_{d>=1} (1 - q^d)^(-bosons): the full Fock space of that many free bosons."""
    coeffs = [1] + [0] * N
    for d in range(1, N + 1):
        for _ in range(bosons):
            _divide_geometric(coeffs, d, N)
    return QSeries(coeffs)


def first_discrepancy(a: QSeries, b: QSeries) -> int | None:
    """Smallest weight where the coefficients differ, or None."""
    if a.truncation != b.truncation:
        raise TruncationMismatch(f"truncations differ: {a.truncation} vs {b.truncation}")
    for w, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return w
    return None


def generator_profile_of(series: QSeries) -> list[tuple[int, int]]:
    """Signed generator counts (w, e_w) with series = prod_w free(w)^e_w up to q^N.

    Positive counts are generators a free algebra would need; a negative count
    at weight w is the first place the series falls short of a free algebra.
    Requires series[0] = 1.
    """
    if series[0] != 1:
        raise ValueError("series must start with 1")
    N = series.truncation
    current = [1] + [0] * N
    out = []
    for w in range(1, N + 1):
        e = series[w] - current[w]
        if e:
            out.append((w, e))
            for j in range(w, N + 1):
                if e > 0:
                    for _ in range(e):
                        _divide_geometric(current, j, N)
                else:
                    for _ in range(-e):
                        # multiply by (1 - q^j)
                        for v in range(N, j - 1, -1):
                            current[v] -= current[v - j]
    return out


def as_series(values: Sequence[int]) -> QSeries:
    return QSeries(tuple(values))
