"""Sparse multivariate polynomials with exact coefficients.

Coefficients are ``Fraction`` or ``Cyclotomic``; a polynomial is a mapping
from exponent tuples to nonzero coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Sequence

from .cyclotomic import Cyclotomic, format_scalar

__all__ = ["Poly", "variables"]


def _coeff(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Cyclotomic) and x.b == 0:
        return x.a
    return x


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not match {nvars} variables")
            if c:
                clean[exps] = _coeff(c)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, nvars: int, c) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> Poly:
        return cls(len(exps), {tuple(exps): c})

    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return Poly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.constant(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self == Poly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def diff(self, i: int) -> Poly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Poly(self.nvars, out)

    def gradient(self) -> tuple[Poly, ...]:
        return tuple(self.diff(i) for i in range(self.nvars))

    def __call__(self, *point):
        return self.eval(point)

    def eval(self, point: Sequence):
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def compose(self, subs: Sequence[Poly]) -> Poly:
        """Substitute polynomial ``subs[i]`` for variable i."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        target = subs[0].nvars
        result = Poly(target)
        for e, c in self.terms.items():
            t = Poly.constant(target, c)
            for s, k in zip(subs, e):
                if k:
                    t = t * s ** k
            result = result + t
        return result

    def float_terms(self) -> list[tuple[float, tuple]]:
        """Coefficients rounded to double precision, for fast numerical evaluation."""
        return [(float(c), e) for e, c in sorted(self.terms.items())]

    # text format ------------------------------------------------------
    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0]))):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if isinstance(c, Cyclotomic):
                ctext = f"({c})"
            else:
                ctext = format_scalar(c)
            if not mono:
                parts.append(ctext)
            elif ctext == "1":
                parts.append(mono)
            elif ctext == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{ctext}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    _FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str, nvars: int, names: Sequence[str] | None = None) -> Poly:
        """Parse sums of terms like ``3/2*x1^2*x2``, ``-x3`` or ``(1+w)*x1``."""
        names = list(names or [f"x{i + 1}" for i in range(nvars)])
        index = {n: i for i, n in enumerate(names)}
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        # split on top-level +/- signs
        terms, depth, start = [], 0, 0
        for pos, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0 and pos > start and s[pos - 1] not in "*^":
                terms.append(s[start:pos])
                start = pos
        terms.append(s[start:])
        out = Poly(nvars)
        for term in terms:
            sign = 1
            if term[0] in "+-":
                sign = -1 if term[0] == "-" else 1
                term = term[1:]
            coeff = Fraction(sign)
            exps = [0] * nvars
            for factor in _split_factors(term):
                if factor.startswith("("):
                    if not factor.endswith(")"):
                        raise ValueError(f"malformed factor {factor!r}")
                    coeff = Cyclotomic.parse(factor[1:-1]) * coeff
                    continue
                m = cls._FACTOR.match(factor)
                if m and m.group(1) in index:
                    exps[index[m.group(1)]] += int(m.group(2) or 1)
                elif m and m.group(1) == "w":
                    coeff = Cyclotomic(0, 1) * coeff
                else:
                    try:
                        coeff = coeff * Fraction(factor)
                    except ValueError as exc:
                        raise ValueError(f"unknown factor {factor!r} in {text!r}") from exc
            out = out + Poly(nvars, {tuple(exps): coeff})
        return out


def _split_factors(term: str) -> list[str]:
    out, depth, start = [], 0, 0
    for pos, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            out.append(term[start:pos])
            start = pos + 1
    out.append(term[start:])
    if any(not f for f in out):
        raise ValueError(f"malformed term {term!r}")
    return out


def variables(nvars: int) -> tuple[Poly, ...]:
    return tuple(Poly.var(nvars, i) for i in range(nvars))
