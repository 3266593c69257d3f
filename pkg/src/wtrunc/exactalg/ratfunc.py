"""Univariate rational functions in normal form."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import upoly
from .mpoly import MPoly
from .scalar import as_scalar


class PoleError(ZeroDivisionError):
    """Evaluation at a parameter where a function (or curve) is not defined."""

    def __init__(self, value, reason: str = "pole"):
        super().__init__(f"{reason} at {value}")
        self.value = value
        self.reason = reason


class RatFunc:
    """num/den in one variable, reduced, den with content 1 and positive leading coefficient."""

    __slots__ = ("var", "num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if var is None:
            for cand in (num, den):
                if isinstance(cand, MPoly) and cand.free_variables():
                    var = cand.free_variables()[0]
                    break
            else:
                var = "x"
        n = self._dense(num, var)
        d = self._dense(den, var) if den is not None else [Fraction(1)]
        if not d:
            raise ZeroDivisionError("zero denominator")
        g = upoly.gcd_(n, d)
        if upoly.deg(g) > 0:
            n = upoly.exact_div(n, g)
            d = upoly.exact_div(d, g)
        if not n:
            d = [Fraction(1)]
        # integer content-1 denominator with positive leading coefficient
        den_l = lcm(*(c.denominator for c in d))
        ints = [int(c * den_l) for c in d]
        cont = 0
        for c in ints:
            cont = gcd(cont, c)
        factor = Fraction(den_l, cont) * (1 if ints[-1] > 0 else -1)
        d = [c * factor for c in d]
        n = [c * factor for c in n]
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "num", MPoly.from_dense(n, var))
        object.__setattr__(self, "den", MPoly.from_dense(d, var))

    @staticmethod
    def _dense(p, var):
        if isinstance(p, MPoly):
            return p.to_dense(var)
        if isinstance(p, (list, tuple)):
            return upoly.strip(as_scalar(c) for c in p)
        return upoly.strip([as_scalar(p)])

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def num_dense(self) -> list[Fraction]:
        return self.num.to_dense(self.var)

    @property
    def den_dense(self) -> list[Fraction]:
        return self.den.to_dense(self.var)

    def degrees(self) -> tuple[int, int]:
        return self.num.degree(self.var), self.den.degree(self.var)

    def is_constant(self) -> bool:
        return self.num.degree(self.var) <= 0 and self.den.degree(self.var) <= 0

    def __call__(self, t) -> Fraction:
        t = as_scalar(t)
        d = upoly.evaluate(self.den_dense, t)
        if d == 0:
            raise PoleError(t)
        return upoly.evaluate(self.num_dense, t) / d

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (
            self.num_dense == other.num_dense
            and self.den_dense == other.den_dense
        )

    def __hash__(self):
        return hash((tuple(self.num_dense), tuple(self.den_dense)))

    def _binop(self, other, op):
        if not isinstance(other, RatFunc):
            other = RatFunc(as_scalar(other), var=self.var)
        a, b, c, d = self.num_dense, self.den_dense, other.num_dense, other.den_dense
        if op == "+":
            return RatFunc(upoly.add(upoly.mul(a, d), upoly.mul(c, b)), upoly.mul(b, d), self.var)
        if op == "-":
            return RatFunc(upoly.sub(upoly.mul(a, d), upoly.mul(c, b)), upoly.mul(b, d), self.var)
        if op == "*":
            return RatFunc(upoly.mul(a, c), upoly.mul(b, d), self.var)
        return RatFunc(upoly.mul(a, d), upoly.mul(b, c), self.var)

    def __add__(self, other):
        return self._binop(other, "+")

    def __sub__(self, other):
        return self._binop(other, "-")

    def __mul__(self, other):
        return self._binop(other, "*")

    def __truediv__(self, other):
        return self._binop(other, "/")

    __radd__ = __add__
    __rmul__ = __mul__

    def limit_at_infinity(self) -> Fraction | None:
        """Finite limit as var -> oo, or None if it diverges."""
        dn, dd = self.degrees()
        if dn > dd:
            return None
        if dn < dd:
            return Fraction(0)
        return self.num_dense[-1] / self.den_dense[-1]

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"
