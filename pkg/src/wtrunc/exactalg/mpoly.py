"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import upoly
from .scalar import as_scalar


def _merge_vars(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    out = list(a)
    for v in b:
        if v not in out:
            out.append(v)
    return tuple(out)


class MPoly:
    """Polynomial over Q in an explicit, ordered list of variables.

    Instances are immutable.  ``terms`` maps exponent tuples (one entry per
    variable) to nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables in {variables}")
        clean: dict[tuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError("exponent vector length does not match variable count")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = as_scalar(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _clean(cls, variables: tuple, terms: dict) -> "MPoly":
        # trusted constructor: terms already map exponent tuples to nonzero Fractions
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, value, variables: Sequence[str] = ()) -> "MPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MPoly":
        variables = tuple(variables) if variables is not None else (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name} not among {variables}")
        return cls(variables, {exps: 1})

    @classmethod
    def from_dense(cls, coeffs: Sequence, var: str) -> "MPoly":
        """Univariate polynomial from ascending coefficients."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_coeffs_in(cls, coeffs: Sequence["MPoly"], var: str, variables: Sequence[str]) -> "MPoly":
        """Inverse of ``coeffs_in``: sum of coeffs[i] * var**i."""
        variables = tuple(variables)
        idx = variables.index(var)
        terms: dict[tuple, Fraction] = {}
        for i, c in enumerate(coeffs):
            c = c.with_variables(variables)
            for exps, val in c.terms.items():
                e = list(exps)
                e[idx] += i
                terms[tuple(e)] = val
        return cls(variables, terms)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if None); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max(e[i] for e in self.terms)

    def free_variables(self) -> tuple[str, ...]:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.variables, exps):
                if e:
                    used.add(v)
        return tuple(v for v in self.variables if v in used)

    def is_univariate(self) -> bool:
        return len(self.free_variables()) <= 1

    # -- variable management ---------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> "MPoly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        for v, col in zip(self.variables, zip(*self.terms) if self.terms else []):
            if v not in pos and any(col):
                raise ValueError(f"variable {v} in use, cannot drop it")
        terms = {}
        for exps, c in self.terms.items():
            e = [0] * len(variables)
            for v, x in zip(self.variables, exps):
                if v in pos:
                    e[pos[v]] = x
            terms[tuple(e)] = c
        return MPoly(variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        return MPoly(tuple(mapping.get(v, v) for v in self.variables), self.terms)

    def _aligned(self, other) -> tuple["MPoly", "MPoly"]:
        if not isinstance(other, MPoly):
            other = MPoly.const(other, self.variables)
        if other.variables == self.variables:
            return self, other
        vs = _merge_vars(self.variables, other.variables)
        return self.with_variables(vs), other.with_variables(vs)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "MPoly":
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            v = terms.get(e)
            if v is None:
                terms[e] = c
            else:
                v += c
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        return MPoly._clean(a.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._clean(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        a, b = self._aligned(other)
        return a + (-b)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            s = as_scalar(other)
            if not s:
                return MPoly._clean(self.variables, {})
            return MPoly._clean(self.variables, {e: c * s for e, c in self.terms.items()})
        a, b = self._aligned(other)
        ta, tb = a.terms, b.terms
        integral = all(c.denominator == 1 for c in ta.values()) and all(
            c.denominator == 1 for c in tb.values()
        )
        if integral:
            # plain ints are far cheaper than Fraction arithmetic
            ta = {e: c.numerator for e, c in ta.items()}
            tb = {e: c.numerator for e, c in tb.items()}
        acc: dict = {}
        for e1, c1 in ta.items():
            for e2, c2 in tb.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        if integral:
            terms = {e: Fraction(c) for e, c in acc.items() if c}
        else:
            terms = {e: c for e, c in acc.items() if c}
        return MPoly._clean(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative power")
        out = MPoly.const(1, self.variables)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            try:
                other = MPoly.const(as_scalar(other), self.variables)
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        if self._hash is None:
            used = self.free_variables()
            canon = self.with_variables(tuple(sorted(used)))
            object.__setattr__(self, "_hash", hash((canon.variables, frozenset(canon.terms.items()))))
        return self._hash

    # -- leading terms / division ----------------------------------------
    def leading_term(self) -> tuple[tuple, Fraction]:
        """Lex-leading term with respect to the variable order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def divmod_lex(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        a, b = self._aligned(other)
        if not b.terms:
            raise ZeroDivisionError("division by zero polynomial")
        be, bc = b.leading_term()
        quot: dict[tuple, Fraction] = {}
        rem = dict(a.terms)
        remainder: dict[tuple, Fraction] = {}
        while rem:
            e = max(rem)
            c = rem.pop(e)
            if all(x >= y for x, y in zip(e, be)):
                qe = tuple(x - y for x, y in zip(e, be))
                qc = c / bc
                quot[qe] = quot.get(qe, Fraction(0)) + qc
                for e2, c2 in b.terms.items():
                    if e2 == be:
                        continue
                    t = tuple(x + y for x, y in zip(qe, e2))
                    v = rem.get(t, Fraction(0)) - qc * c2
                    if v:
                        rem[t] = v
                    else:
                        rem.pop(t, None)
            else:
                remainder[e] = c
        return MPoly(a.variables, quot), MPoly(a.variables, remainder)

    def exact_div(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            s = as_scalar(other)
            if s == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / s)
        q, r = self.divmod_lex(other)
        if r.terms:
            raise ValueError("inexact multivariate division")
        return q

    def divides(self, other: "MPoly") -> bool:
        """True if self divides other."""
        return not other.divmod_lex(self)[1].terms

    # -- evaluation --------------------------------------------------------
    def subs(self, values: Mapping[str, object]) -> "MPoly":
        """Substitute exact scalars for some variables; they are dropped."""
        values = {v: as_scalar(x) for v, x in values.items() if v in self.variables}
        keep = tuple(v for v in self.variables if v not in values)
        idx = [i for i, v in enumerate(self.variables) if v in values]
        vals = [values[self.variables[i]] for i in idx]
        keep_idx = [i for i, v in enumerate(self.variables) if v not in values]
        terms: dict[tuple, Fraction] = {}
        for exps, c in self.terms.items():
            for i, x in zip(idx, vals):
                if exps[i]:
                    c = c * x ** exps[i]
            if not c:
                continue
            e = tuple(exps[i] for i in keep_idx)
            terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(keep, terms)

    def __call__(self, *args, **kwargs) -> Fraction:
        if args:
            if len(args) != len(self.variables):
                raise TypeError("positional evaluation needs one value per variable")
            kwargs = dict(zip(self.variables, args))
        result = self.subs(kwargs)
        if result.variables:
            if not result.is_constant():
                raise ValueError(f"variables {result.free_variables()} left unassigned")
        return result.constant_value() if result.terms else Fraction(0)

    def compose(self, var: str, replacement: "MPoly") -> "MPoly":
        """Substitute a polynomial for ``var``."""
        coeffs = self.coeffs_in(var)
        out = MPoly.const(0, ())
        for c in reversed(coeffs):
            out = out * replacement + c
        rest = [v for v in self.variables if v != var]
        return out.with_variables(_merge_vars(rest, out.free_variables()))

    # -- univariate views --------------------------------------------------
    def coeffs_in(self, var: str) -> list["MPoly"]:
        """Coefficients (ascending) as polynomials in the remaining variables."""
        rest = tuple(v for v in self.variables if v != var)
        if var not in self.variables:
            return [MPoly(rest, self.terms)] if self.terms else []
        i = self.variables.index(var)
        buckets: dict[int, dict[tuple, Fraction]] = {}
        for exps, c in self.terms.items():
            buckets.setdefault(exps[i], {})[exps[:i] + exps[i + 1:]] = c
        top = max(buckets) if buckets else -1
        return [MPoly(rest, buckets.get(d, {})) for d in range(top + 1)]

    def to_dense(self, var: str | None = None) -> list[Fraction]:
        """Ascending coefficient list; requires a univariate polynomial."""
        free = self.free_variables()
        if var is None:
            if len(free) > 1:
                raise ValueError(f"not univariate: {free}")
            var = free[0] if free else (self.variables[0] if self.variables else "x")
        elif any(v != var for v in free):
            raise ValueError(f"not univariate in {var}: {free}")
        return [c.constant_value() if c.terms else Fraction(0) for c in self.coeffs_in(var)]

    def derivative(self, var: str) -> "MPoly":
        if var not in self.variables:
            return MPoly(self.variables, {})
        i = self.variables.index(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                terms[tuple(e)] = c * exps[i]
        return MPoly(self.variables, terms)

    def primitive(self) -> "MPoly":
        """Scale to integer coefficients with gcd 1 and positive lex-leading coefficient."""
        if not self.terms:
            return self
        from math import gcd, lcm
        den = lcm(*(c.denominator for c in self.terms.values()))
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        sign = 1 if self.leading_term()[1] > 0 else -1
        return self * Fraction(sign * den, g)

    # -- display -------------------------------------------------------------
    def __repr__(self) -> str:
        return f"MPoly({self.variables}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def univariate(coeffs: Iterable, var: str) -> MPoly:
    return MPoly.from_dense(list(coeffs), var)


def dense_to_mpoly(p: upoly.UPoly, var: str) -> MPoly:
    return MPoly.from_dense(p, var)
