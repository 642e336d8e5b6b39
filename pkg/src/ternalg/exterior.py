"""Z3-graded exterior calculus with d^3 = 0 on polynomial coefficients.

Forms are left-module elements sum f(x) * m where m is a canonical monomial in
dx^i (weight 1, degree 1) and d2x^i (weight 2, degree 2).  Canonical words
put every d2x first, then the dx factors; a cubic dx word is stored as its
lexicographically least rotation.  Anything of total weight >= 4 is zero.
"""

from __future__ import annotations

import itertools
import json
import random
from typing import Iterable, Sequence

from .cyclotomic import Cyclotomic, omega
from .graded_rewrite import Generator, Quotient, RelationFamily
from .poly import Poly
from .report import CheckResult

__all__ = [
    "DifferentialForm",
    "normalize_word",
    "d",
    "d3_zero_check",
    "module_basis",
    "module_dimension",
    "module_dimension_formula",
    "module_dimension_by_rewriting",
    "leibniz_consistency_check",
    "swap_roundtrip",
    "monomials",
    "himbert_check",
    "himbert_factored",
    "himbert_operator",
    "symbol",
    "parse_symbol",
    "random_poly",
    "random_one_form",
]

W = omega()
MAX_WEIGHT = 3

# a symbol is (order, index): (1, i) is dx^i, (2, i) is d2x^i, indices 1-based


def symbol(text: str) -> tuple[int, int]:
    return parse_symbol(text)


def parse_symbol(text: str) -> tuple[int, int]:
    if text.startswith("d2x"):
        return (2, int(text[3:]))
    if text.startswith("dx"):
        return (1, int(text[2:]))
    raise ValueError(f"unknown differential symbol {text!r}")


def symbol_text(s: tuple[int, int]) -> str:
    return ("dx" if s[0] == 1 else "d2x") + str(s[1])


def word_weight(word: Sequence) -> int:
    return sum(s[0] for s in word)


def word_degree(word: Sequence) -> int:
    return word_weight(word) % 3


def normalize_word(word: Sequence) -> dict[tuple, Cyclotomic]:
    """Rewrite a raw word to {canonical monomial: coefficient} (empty dict means 0)."""
    word = tuple(word)
    if word_weight(word) > MAX_WEIGHT:
        return {}
    coeff = Cyclotomic(1)
    # bubble every d2x to the left: dx d2x = w d2x dx
    w = list(word)
    changed = True
    while changed:
        changed = False
        for p in range(len(w) - 1):
            if w[p][0] == 1 and w[p + 1][0] == 2:
                w[p], w[p + 1] = w[p + 1], w[p]
                coeff = coeff * W
                changed = True
    w = tuple(w)
    if len(w) == 3:
        # pure dx triple; ijk = w * jki, so a word is w^m times its m-th left rotation
        if w[0] == w[1] == w[2]:
            return {}
        rots = [w[m:] + w[:m] for m in range(3)]
        m = min(range(3), key=lambda k: rots[k])
        coeff = coeff * W ** m
        w = rots[m]
    return {w: coeff}


class DifferentialForm:
    """Finite sum of Poly coefficients times canonical monomials, on n coordinates."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        clean = {}
        for word, f in (terms or {}).items():
            if not isinstance(f, Poly):
                f = Poly.constant(n, f)
            if f.nvars != n:
                raise ValueError("coefficient lives in the wrong polynomial ring")
            if f:
                clean[tuple(word)] = f
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DifferentialForm is immutable")

    @classmethod
    def function(cls, f: Poly) -> DifferentialForm:
        return cls(f.nvars, {(): f})

    @classmethod
    def from_word(cls, n: int, word: Sequence, coeff=None) -> DifferentialForm:
        """coeff * word, normalised."""
        coeff = Poly.constant(n, 1) if coeff is None else coeff
        if not isinstance(coeff, Poly):
            coeff = Poly.constant(n, coeff)
        return cls(n, {w: coeff * c for w, c in normalize_word(word).items()})

    def __add__(self, other):
        if not isinstance(other, DifferentialForm) or other.n != self.n:
            return NotImplemented
        out = dict(self.terms)
        for w, f in other.terms.items():
            out[w] = out[w] + f if w in out else f
        return DifferentialForm(self.n, out)

    def __neg__(self):
        return DifferentialForm(self.n, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> DifferentialForm:
        """Left multiplication by a function or scalar."""
        return DifferentialForm(self.n, {w: f * g for w, g in self.terms.items()})

    def times_word(self, word: Sequence) -> DifferentialForm:
        """Right multiplication by a raw differential word."""
        out = DifferentialForm(self.n)
        for w, f in self.terms.items():
            out = out + DifferentialForm.from_word(self.n, w + tuple(word), f)
        return out

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"DifferentialForm({self.to_json()})"

    def to_json_obj(self) -> dict:
        names = [f"x{i + 1}" for i in range(self.n)]
        terms = [
            {"coeff": f.to_text(names), "word": [symbol_text(s) for s in w]}
            for w, f in sorted(self.terms.items())
        ]
        return {"n": self.n, "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> DifferentialForm:
        n = int(obj["n"])
        out = cls(n)
        for t in obj["terms"]:
            word = [parse_symbol(s) for s in t["word"]]
            if any(not 1 <= s[1] <= n for s in word):
                raise ValueError(f"coordinate index out of range in {t['word']}")
            out = out + cls.from_word(n, word, Poly.parse(str(t["coeff"]), n))
        return out

    @classmethod
    def from_json(cls, text: str) -> DifferentialForm:
        return cls.from_json_obj(json.loads(text))


def _d_word(word: tuple) -> list[tuple[Cyclotomic, tuple]]:
    """d of a monomial word by the w-Leibniz rule, as raw (coeff, word) pairs."""
    out = []
    prefix = 0
    for p, (order, i) in enumerate(word):
        if order == 1:
            out.append((W ** prefix, word[:p] + ((2, i),) + word[p + 1:]))
        # d(d2x) = 0 contributes nothing
        prefix += order
    return out


def d(phi: DifferentialForm) -> DifferentialForm:
    """Exterior derivative: d(f m) = df m + f dm, df = sum (d_i f) dx^i placed at the left."""
    n = phi.n
    out = DifferentialForm(n)
    for word, f in phi.terms.items():
        for i in range(n):
            fi = f.diff(i)
            if fi:
                out = out + DifferentialForm.from_word(n, ((1, i + 1),) + word, fi)
        for c, w in _d_word(word):
            out = out + DifferentialForm.from_word(n, w, f * c)
    return out


def d3_zero_check(f) -> CheckResult:
    """d(d(d phi)) = 0 for a polynomial function or a DifferentialForm."""
    phi = f if isinstance(f, DifferentialForm) else DifferentialForm.function(f)
    if phi.n > 4:
        raise ValueError("d3_zero_check supports at most 4 coordinates")
    d3 = d(d(d(phi)))
    label = f.to_text() if isinstance(f, Poly) else phi.to_json_obj()
    return CheckResult("d3_zero", d3.is_zero(), witness=None if d3.is_zero() else d3.to_json_obj(),
                       details={"input": label})


def random_one_form(rng: random.Random, n: int, max_degree: int = 3) -> DifferentialForm:
    """sum_i f_i dx^i with random polynomial coefficients."""
    out = DifferentialForm(n)
    for i in range(1, n + 1):
        out = out + DifferentialForm.from_word(n, ((1, i),), random_poly(rng, n, max_degree))
    return out


# ---------------------------------------------------------------------------
# module dimension


def module_basis(n: int) -> list[tuple]:
    """Canonical monomials of weight 1..3, found by normalising every raw word."""
    syms = [(1, i) for i in range(1, n + 1)] + [(2, i) for i in range(1, n + 1)]
    found = set()
    for length in (1, 2, 3):
        for word in itertools.product(syms, repeat=length):
            if word_weight(word) <= MAX_WEIGHT:
                found.update(normalize_word(word))
    return sorted(found, key=lambda w: (word_weight(w), w))


def module_dimension_formula(n: int) -> int:
    return (n ** 3 + 6 * n ** 2 + 5 * n) // 3


def module_dimension(n: int) -> int:
    if n > 5:
        raise ValueError("module_dimension enumerates n <= 5")
    return len(module_basis(n))


def module_dimension_by_rewriting(n: int) -> int:
    """Independent count through the quotient engine: weights 1..3 of the free algebra modulo
    the cubic dx rule and the dx d2x = w d2x dx rule."""
    gens = [Generator(f"dx{i}", 1, 1) for i in range(1, n + 1)]
    gens += [Generator(f"d2x{i}", 2, 2) for i in range(1, n + 1)]
    q = Quotient(gens, (RelationFamily("ExteriorTernary"), RelationFamily("ExteriorBinary")))
    return sum(q.dimension(w) for w in (1, 2, 3))


# ---------------------------------------------------------------------------
# functions against second differentials

RULES = ("derived", "reordered")


def _swap_remainder(k: int, m: int, n: int, rule: str) -> DifferentialForm:
    """R in x^k d2x^m - d2x^m x^k = R."""
    dk, dm = (1, k), (1, m)
    one = Poly.constant(n, 1)
    if rule == "derived":
        # follows from d(x^k dx^m) = d(dx^m x^k)
        return DifferentialForm.from_word(n, (dm, dk), one * W) - DifferentialForm.from_word(n, (dk, dm), one)
    if rule == "reordered":
        # w (dx^k dx^m - w^2 dx^m dx^k)
        return DifferentialForm.from_word(n, (dk, dm), one * W) - DifferentialForm.from_word(n, (dm, dk), one)
    raise ValueError(f"unknown rule {rule!r}; choose from {RULES}")


def leibniz_consistency_check(k: int, m: int, rule: str = "derived", n: int | None = None) -> CheckResult:
    """Compare d(x^k dx^m) with d(dx^m x^k) once x^k is moved to the left by ``rule``.

    d(x^k dx^m) = dx^k dx^m + x^k d2x^m, while d(dx^m x^k) = d2x^m x^k + w dx^m dx^k
    and d2x^m x^k = x^k d2x^m - R.
    """
    n = n or max(k, m)
    xk = Poly.var(n, k - 1)
    one = Poly.constant(n, 1)
    left = DifferentialForm.from_word(n, ((1, k), (1, m)), one) + DifferentialForm.from_word(n, ((2, m),), xk)
    remainder = _swap_remainder(k, m, n, rule)
    moved = DifferentialForm.from_word(n, ((2, m),), xk) - remainder
    right = moved + DifferentialForm.from_word(n, ((1, m), (1, k)), one * W)
    diff = left - right
    return CheckResult(f"leibniz_consistency(k={k},m={m},{rule})", diff.is_zero(),
                       witness=None if diff.is_zero() else diff.to_json_obj(),
                       details={"left": left.to_json_obj(), "right": right.to_json_obj()})


def swap_roundtrip(k: int, m: int, rule: str = "derived", n: int | None = None) -> bool:
    """Move x^k right across d2x^m with the rule, then back; the original must return."""
    n = n or max(k, m)
    R = _swap_remainder(k, m, n, rule)
    # state: a * x^k d2x^m + b * d2x^m x^k + form
    a, b, form = Cyclotomic(1), Cyclotomic(0), DifferentialForm(n)
    # x^k d2x^m = d2x^m x^k + R
    a, b, form = Cyclotomic(0), b + a, form + R.scale(a)
    # d2x^m x^k = x^k d2x^m - R
    a, b, form = a + b, Cyclotomic(0), form - R.scale(b)
    return a == 1 and b == 0 and form.is_zero()


# ---------------------------------------------------------------------------
# the cubic Laplacian


def himbert_factored(p: Poly) -> Poly:
    """(dx + dy + dz)(dx + w dy + w^2 dz)(dx + w^2 dy + w dz) p."""
    if p.nvars != 3:
        raise ValueError("the cubic Laplacian acts on polynomials in x, y, z")

    def op(f, cy, cz):
        return f.diff(0) + f.diff(1) * cy + f.diff(2) * cz

    w, w2 = W, W * W
    return op(op(op(p, w2, w), w, w2), Cyclotomic(1), Cyclotomic(1))


def himbert_operator(p: Poly) -> Poly:
    """dx^3 + dy^3 + dz^3 - 3 dx dy dz applied to p."""
    if p.nvars != 3:
        raise ValueError("the cubic Laplacian acts on polynomials in x, y, z")
    x3 = p.diff(0).diff(0).diff(0)
    y3 = p.diff(1).diff(1).diff(1)
    z3 = p.diff(2).diff(2).diff(2)
    xyz = p.diff(0).diff(1).diff(2)
    return x3 + y3 + z3 - xyz * 3


def himbert_check(p: Poly) -> CheckResult:
    a, b = himbert_factored(p), himbert_operator(p)
    return CheckResult("himbert", a == b, details={"p": p.to_text(["x", "y", "z"]),
                                                   "factored": a.to_text(["x", "y", "z"]),
                                                   "operator": b.to_text(["x", "y", "z"])})


def monomials(nvars: int, max_degree: int) -> Iterable[Poly]:
    for deg in range(max_degree + 1):
        for exps in itertools.product(range(deg + 1), repeat=nvars):
            if sum(exps) == deg:
                yield Poly.monomial(exps)


def random_poly(rng: random.Random, nvars: int, max_degree: int, terms: int = 4, coeff_range: int = 5) -> Poly:
    out = Poly(nvars)
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        exps = [0] * nvars
        for _ in range(deg):
            exps[rng.randrange(nvars)] += 1
        c = rng.randint(-coeff_range, coeff_range)
        out = out + Poly.monomial(exps, c)
    return out
