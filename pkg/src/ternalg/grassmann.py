"""The merged Z3-graded Grassmann algebra on theta^A (degree 1) and theta-bar^B (degree 2).

Relations: theta^A theta^B theta^C = w theta^B theta^C theta^A, the conjugate
rule with w^2 for theta-bar, theta^A tb^B = w tb^B theta^A, and the degree-0
products theta^A tb^B are central.  Monomials are graded by word length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .cyclotomic import Cyclotomic, omega
from .graded_rewrite import GradedElement, Quotient, RelationFamily, theta_generators
from .report import CheckResult

__all__ = [
    "GrassmannConfig",
    "Derivation",
    "d_formula",
    "total_dimension",
    "grade_sectors",
    "apply_derivation",
    "derivation_ternary_check",
    "all_derivation_checks",
    "apply_word",
    "lift",
    "LIFTS",
    "config",
    "MAX_N",
]

W = omega()
MAX_N = 4
MAX_LENGTH = 4  # every length-4 monomial vanishes, hence all longer ones do


def d_formula(n: int) -> int:
    return (2 * n ** 3 + 9 * n ** 2 + 4 * n + 3) // 3


class GrassmannConfig:
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one generator")
        self.n = n
        self.thetas = theta_generators(n)
        self.bars = theta_generators(n, bar=True)
        self.gens = self.thetas + self.bars
        self.families = (
            RelationFamily("L", on=tuple(g.label for g in self.thetas)),
            RelationFamily("Lbar", on=tuple(g.label for g in self.bars)),
            RelationFamily("MixedThetaThetaBar"),
            RelationFamily("DegreeZeroCentral"),
        )

    @cached_property
    def quotient(self) -> Quotient:
        return Quotient(self.gens, self.families, grading="length")

    def dims(self) -> dict[int, int]:
        return {k: self.quotient.dimension(k) for k in range(MAX_LENGTH + 1)}

    def basis(self, max_length: int = MAX_LENGTH - 1) -> list[tuple]:
        out = []
        for k in range(max_length + 1):
            out.extend(self.quotient.basis(k))
        return out

    def degree(self, word) -> int:
        return self.quotient.word_degree(word)

    @cached_property
    def length4_vanishes(self) -> bool:
        return self.quotient.dimension(MAX_LENGTH) == 0

    def normal_form(self, e: GradedElement) -> GradedElement:
        if not self.length4_vanishes:
            raise AssertionError("length-4 monomials survive; truncation would be wrong")
        # the ideal contains every word of length >= 4
        kept = {w: c for w, c in e.terms.items() if len(w) < MAX_LENGTH}
        return self.quotient.normal_form(GradedElement(kept))

    def label(self, word) -> str:
        return "*".join(word) if word else "1"


_CONFIGS: dict[int, GrassmannConfig] = {}


def config(n: int) -> GrassmannConfig:
    if n not in _CONFIGS:
        _CONFIGS[n] = GrassmannConfig(n)
    return _CONFIGS[n]


def total_dimension(n: int) -> int:
    """Sum of the quotient dimensions over all lengths, unit included."""
    if n > MAX_N:
        raise ValueError(f"N = {n} is too large for enumeration (max {MAX_N})")
    cfg = config(n)
    dims = cfg.dims()
    if dims[MAX_LENGTH]:
        raise AssertionError(f"length-{MAX_LENGTH} component has dimension {dims[MAX_LENGTH]}")
    return sum(dims.values())


def grade_sectors(n: int) -> dict[str, list[str]]:
    """Quotient basis monomials split by z3 degree into A0, A1, A2."""
    if n > 3:
        raise ValueError("grade sectors are listed for N <= 3")
    cfg = config(n)
    out: dict[str, list[str]] = {"A0": [], "A1": [], "A2": []}
    for w in cfg.basis():
        out[f"A{cfg.degree(w)}"].append(cfg.label(w))
    return out


@dataclass(frozen=True)
class Derivation:
    """d_A (bar=False) acts on theta^A, bar-d_A (bar=True) on theta-bar^A.  Index is 1-based."""

    index: int
    bar: bool = False

    @property
    def target(self) -> str:
        return f"tb{self.index}" if self.bar else f"t{self.index}"

    def __str__(self):
        return f"db{self.index}" if self.bar else f"d{self.index}"


def _label_degree(label: str) -> int:
    return 2 if label.startswith("tb") else 1


def _derive_word(D: Derivation, word: tuple) -> dict:
    """Twisted Leibniz rule on a free word: skipping a prefix of z3 degree k costs w^k."""
    out: dict = {}
    prefix = 0
    for pos, g in enumerate(word):
        if g == D.target:
            rest = word[:pos] + word[pos + 1:]
            out[rest] = out.get(rest, Cyclotomic(0)) + W ** prefix
        prefix = (prefix + _label_degree(g)) % 3
    return out


def apply_derivation(D: Derivation, e: GradedElement, n: int | None = None) -> GradedElement:
    """Apply D to e word by word; with ``n`` given the result is put in normal form."""
    out: dict = {}
    for word, c in e.terms.items():
        for w, v in _derive_word(D, word).items():
            out[w] = out.get(w, Cyclotomic(0)) + c * v
    res = GradedElement(out)
    return config(n).normal_form(res) if n is not None else res


LIFTS = ("leading_repeat", "normal_form")


def lift(word: tuple, n: int, rule: str = "leading_repeat") -> GradedElement:
    """A free-algebra representative of the quotient basis monomial ``word``.

    The twisted derivations do not preserve the cubic relations, so their
    action on the quotient depends on the representative.  "normal_form"
    uses the basis word itself.  "leading_repeat" rewrites a cubic word on
    two distinct generators as the rotation whose repeated generator comes
    first (x x y), a choice that commutes with relabelling the generators.
    """
    if rule not in LIFTS:
        raise ValueError(f"unknown lift {rule!r}; choose from {LIFTS}")
    if rule == "normal_form" or len(word) != 3 or len(set(word)) != 2:
        return GradedElement({word: 1})
    rots = [word[k:] + word[:k] for k in range(3)]
    rep = next(r for r in rots if r[0] == r[1])
    c = config(n).normal_form(GradedElement({rep: 1})).coeff(word)
    return GradedElement({rep: 1 / c})


def apply_word(ops, e: GradedElement, n: int, rule: str = "leading_repeat") -> GradedElement:
    """ops = (D1, D2, D3) applied as D1 D2 D3 e, rightmost first.

    ``e`` is a quotient element written on basis words; every intermediate
    result is normalised and lifted again.
    """
    for D in reversed(ops):
        lifted = GradedElement()
        for w, c in e.terms.items():
            lifted = lifted + lift(w, n, rule) * c
        e = apply_derivation(D, lifted, n)
    return e


def derivation_ternary_check(a: int, b: int, c: int, n: int, weight_cap: int = 3,
                             bar: bool = False, rule: str = "leading_repeat") -> CheckResult:
    """d_A d_B d_C = w d_B d_C d_A (or the conjugate rule with w^2 for the bar derivations).

    Both sides are applied to every quotient basis monomial of length <= weight_cap.
    """
    if weight_cap > 4:
        raise ValueError("weight_cap must be at most 4")
    cfg = config(n)
    factor = W * W if bar else W
    A, B, C = (Derivation(i, bar) for i in (a, b, c))
    name = f"derivation_ternary({A},{B},{C})"
    for word in cfg.basis(min(weight_cap, MAX_LENGTH - 1)):
        e = GradedElement({word: 1})
        lhs = apply_word((A, B, C), e, n, rule)
        rhs = apply_word((B, C, A), e, n, rule) * factor
        if lhs != rhs:
            return CheckResult(name, False, witness=cfg.label(word),
                               details={"lhs": lhs.to_text(), "rhs": rhs.to_text(), "lift": rule})
    return CheckResult(name, True, details={"lift": rule})


def all_derivation_checks(n: int, weight_cap: int = 3, rule: str = "leading_repeat") -> list[CheckResult]:
    out = []
    for bar in (False, True):
        for a, b, c in itertools.product(range(1, n + 1), repeat=3):
            out.append(derivation_ternary_check(a, b, c, n, weight_cap, bar, rule))
    return out
