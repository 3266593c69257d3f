"""The orthogonal generalized-parafermion family D^k(n).

The three data polynomials p, q, r are stored once as coefficient tables in
(k, n) and specialized at integer n.  The tables are the only transcription
of the published formulas; everything else is derived from them.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactalg import MPoly

# {(power of k, power of n): coefficient}
P_COEFFS: dict[tuple[int, int], int] = {
    (0, 0): -112, (1, 0): 188, (2, 0): -62, (3, 0): -26, (4, 0): 12,
    (0, 1): 744, (1, 1): -1336, (2, 1): 857, (3, 1): -252, (4, 1): 36,
    (0, 2): -1720, (1, 2): 2534, (2, 2): -1198, (3, 2): 188,
    (0, 3): 1632, (1, 3): -1544, (2, 3): 304,
    (0, 4): -544, (1, 4): 152,
}

Q_COEFFS: dict[tuple[int, int], int] = {
    (0, 0): 20, (1, 0): -19, (2, 0): 6,
    (0, 1): -42, (1, 1): 28,
    (0, 2): 28,
}

R_COEFFS: dict[tuple[int, int], int] = {
    (0, 0): 44, (1, 0): -66, (2, 0): 22,
    (0, 1): -132, (1, 1): 73, (2, 1): 10,
    (0, 2): 88, (1, 2): 10,
}


def _table_poly(table: dict[tuple[int, int], int]) -> MPoly:
    return MPoly(("k", "n"), table)


def p_poly() -> MPoly:
    return _table_poly(P_COEFFS)


def q_poly() -> MPoly:
    return _table_poly(Q_COEFFS)


def r_poly() -> MPoly:
    return _table_poly(R_COEFFS)


def specialize(table_poly: MPoly, n: int, param: str = "k") -> MPoly:
    return table_poly.subs({"n": n}).rename({"k": param})


def critical_levels(n: int) -> tuple[Fraction, Fraction]:
    return Fraction(-2 * n + 2), Fraction(-2 * n + 1)


def c_direct(n: int, k) -> Fraction:
    """Central charge by direct substitution, no normalization."""
    k = Fraction(k)
    return k * n * (2 * k + 2 * n - 3) / ((k + 2 * n - 2) * (k + 2 * n - 1))


def lambda_direct(n: int, k) -> Fraction:
    """lambda_n(k) by direct substitution into the unsimplified product formula.

    Independent of the RatFunc normalization path; raises ZeroDivisionError
    wherever any factor of the printed denominator vanishes.
    """
    k = Fraction(k)

    def ev(table):
        return sum((Fraction(c) * k ** a * n ** b for (a, b), c in table.items()), Fraction(0))

    num = (k + 2 * n - 2) * (k + 2 * n - 1) * ev(P_COEFFS)
    den = 7 * (k - 2) * (k + n - 1) * (2 * n - 1) * ev(Q_COEFFS) * ev(R_COEFFS)
    return num / den
