"""Free associative algebras on Z3-graded generators modulo relation families.

Quotients are computed one weight at a time by exact linear algebra: the
weight-w component of the two-sided ideal is spanned by all u*r*v with r a
base relation, and the quotient dimension is (#words) - rank.  Pivots are
taken at the largest word in degree-lexicographic order, so normal forms are
written on the lexicographically least surviving words.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .cyclotomic import Cyclotomic, _scalar, format_scalar, omega, row_echelon

__all__ = [
    "Generator",
    "GradedElement",
    "RelationFamily",
    "Quotient",
    "KINDS",
    "expand_relations",
    "graded_dimension",
    "normal_form",
    "dimension_table",
    "theta_generators",
    "WeightCapExceeded",
]

W = omega()
W2 = W * W
ONE = Cyclotomic(1)

DEFAULT_CAP = 6


class WeightCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    label: str
    z3_degree: int
    weight: int = 1

    def __post_init__(self):
        if self.z3_degree not in (0, 1, 2):
            raise ValueError(f"z3 degree of {self.label} must be 0, 1 or 2")
        if self.weight < 1:
            raise ValueError(f"weight of {self.label} must be positive")


def theta_generators(n: int, bar: bool = False) -> list[Generator]:
    """t1..tn of degree 1, or tb1..tbn of degree 2 and weight 2."""
    if bar:
        return [Generator(f"tb{i + 1}", 2, 2) for i in range(n)]
    return [Generator(f"t{i + 1}", 1, 1) for i in range(n)]


class GradedElement:
    """Finite linear combination of words (tuples of generator labels)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, c in (terms or {}).items():
            c = _scalar(c)
            if c:
                clean[tuple(word)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedElement is immutable")

    @classmethod
    def word(cls, *labels, coeff=1) -> GradedElement:
        return cls({tuple(labels): coeff})

    @classmethod
    def one(cls) -> GradedElement:
        return cls({(): 1})

    def __add__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Cyclotomic(0)) + c
        return GradedElement(out)

    def __neg__(self):
        return GradedElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, Cyclotomic(0)) + c1 * c2
            return GradedElement(out)
        try:
            s = _scalar(other)
        except TypeError:
            return NotImplemented
        return GradedElement({w: c * s for w, c in self.terms.items()})

    def __rmul__(self, other):
        try:
            s = _scalar(other)
        except TypeError:
            return NotImplemented
        return GradedElement({w: s * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def words(self):
        return list(self.terms)

    def coeff(self, word) -> Cyclotomic:
        return self.terms.get(tuple(word), Cyclotomic(0))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "*".join(w) if w else "1"
            parts.append(mono if c == 1 else f"({c})*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GradedElement({self.to_text()!r})"

    def to_nested(self):
        return [{"word": list(w), "coeff": format_scalar(c)} for w, c in sorted(self.terms.items())]


# ---------------------------------------------------------------------------
# relation families

KINDS = (
    "S0", "S1", "S", "Sbar",
    "L0", "L1", "L", "Lbar",
    "MixedThetaThetaBar", "DegreeZeroCentral",
    "ExteriorTernary", "ExteriorBinary",
    "Custom",
)


@dataclass(frozen=True)
class RelationFamily:
    """A named family of defining relations.

    ``on`` restricts the ternary families to a subset of generator labels.
    For the two-generator-class families (mixed, central, exterior binary)
    the classes are read off the z3 degree: 1 for theta / dx, 2 for theta-bar / d2x.
    """

    kind: str
    on: tuple | None = None
    custom: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown relation family {self.kind!r}")
        if self.on is not None:
            object.__setattr__(self, "on", tuple(self.on))
        object.__setattr__(self, "custom", tuple(self.custom))
        if self.kind == "Custom" and not self.custom:
            raise ValueError("a Custom family needs at least one relation")

    def base_relations(self, gens: Sequence[Generator]) -> list[GradedElement]:
        labels = [g.label for g in gens]
        if self.on is not None:
            unknown = set(self.on) - set(labels)
            if unknown:
                raise ValueError(f"family refers to unknown generators {sorted(unknown)}")
            pool = [l for l in labels if l in self.on]
        else:
            pool = labels
        deg = {g.label: g.z3_degree for g in gens}
        k = self.kind
        rels: list[GradedElement] = []

        def lin(*pairs):
            out: dict = {}
            for c, w in pairs:
                out[w] = out.get(w, Cyclotomic(0)) + _scalar(c)
            return GradedElement(out)

        if k == "Custom":
            return list(self.custom)
        if k in ("S0", "S1", "S", "Sbar", "L0", "L1", "L", "Lbar", "ExteriorTernary"):
            if k == "ExteriorTernary" and self.on is None:
                pool = [l for l in labels if deg[l] == 1]
            for a, b, c in itertools.product(pool, repeat=3):
                abc, bca, cab = (a, b, c), (b, c, a), (c, a, b)
                if k == "S0":
                    for perm in itertools.permutations((a, b, c)):
                        if perm != abc:
                            rels.append(lin((1, abc), (-1, perm)))
                elif k == "S1":
                    rels.append(lin((1, abc), (-1, bca)))
                elif k == "S":
                    rels.append(lin((1, abc), (W, bca), (W2, cab)))
                elif k == "Sbar":
                    rels.append(lin((1, abc), (W2, bca), (W, cab)))
                elif k == "L0":
                    rels.append(lin(*((1, p) for p in itertools.permutations((a, b, c)))))
                elif k == "L1":
                    rels.append(lin((1, abc), (1, bca), (1, cab)))
                elif k in ("L", "ExteriorTernary"):
                    rels.append(lin((1, abc), (-W, bca)))
                else:  # Lbar
                    rels.append(lin((1, abc), (-W2, bca)))
            return rels
        ones = [l for l in pool if deg[l] == 1]
        twos = [l for l in pool if deg[l] == 2]
        if k in ("MixedThetaThetaBar", "ExteriorBinary"):
            # theta tb = w tb theta  /  dx d2x = w d2x dx
            for a, b in itertools.product(ones, twos):
                rels.append(lin((1, (a, b)), (-W, (b, a))))
            return rels
        if k == "DegreeZeroCentral":
            for a, b in itertools.product(ones, twos):
                for x in labels:
                    rels.append(lin((1, (a, b, x)), (-1, (x, a, b))))
            return rels
        raise AssertionError(k)

    def to_json_obj(self) -> dict:
        obj: dict = {"kind": self.kind}
        if self.on is not None:
            obj["on"] = list(self.on)
        if self.custom:
            obj["custom"] = [r.to_nested() for r in self.custom]
        return obj


def _families(family) -> tuple[RelationFamily, ...]:
    if isinstance(family, RelationFamily):
        return (family,)
    if isinstance(family, str):
        return (RelationFamily(family),)
    return tuple(RelationFamily(f) if isinstance(f, str) else f for f in family)


# ---------------------------------------------------------------------------
# the quotient engine


class Quotient:
    """Free algebra on ``gens`` modulo the ideal generated by ``families``.

    ``grading`` is "weight" (generator weights) or "length" (every generator
    counts 1).  Components above ``cap`` are refused.
    """

    def __init__(self, gens: Sequence[Generator], families, grading: str = "weight", cap: int = DEFAULT_CAP):
        if grading not in ("weight", "length"):
            raise ValueError("grading must be 'weight' or 'length'")
        labels = [g.label for g in gens]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be distinct")
        self.gens = tuple(gens)
        self.families = _families(families)
        self.grading = grading
        self.cap = cap
        self._rank = {g.label: i for i, g in enumerate(self.gens)}
        self._gw = {g.label: (g.weight if grading == "weight" else 1) for g in self.gens}
        self._deg = {g.label: g.z3_degree for g in self.gens}
        self._base = None
        self._cache: dict = {}

    # words ---------------------------------------------------------------
    def word_weight(self, word) -> int:
        return sum(self._gw[l] for l in word)

    def word_degree(self, word) -> int:
        return sum(self._deg[l] for l in word) % 3

    def word_key(self, word):
        """Degree-lexicographic sort key."""
        return (self.word_weight(word), tuple(self._rank[l] for l in word))

    def _check_cap(self, weight: int):
        if weight > self.cap:
            raise WeightCapExceeded(f"weight {weight} exceeds the cap {self.cap}")

    def words(self, weight: int) -> list[tuple]:
        """All words of the given weight, in increasing word order."""
        self._check_cap(weight)
        return sorted(self._words(weight), key=self.word_key)

    def _words(self, weight: int):
        if weight == 0:
            yield ()
            return
        for g in self.gens:
            w = self._gw[g.label]
            if w <= weight:
                for rest in self._words(weight - w):
                    yield (g.label,) + rest

    # relations -----------------------------------------------------------
    def base_relations(self) -> list[tuple[int, GradedElement]]:
        if self._base is None:
            base = []
            for fam in self.families:
                for r in fam.base_relations(self.gens):
                    if not r:
                        continue
                    ws = {self.word_weight(w) for w in r.terms}
                    if len(ws) != 1:
                        raise ValueError(f"relation {r} is not homogeneous")
                    base.append((ws.pop(), r))
            self._base = base
        return self._base

    def relations(self, weight: int) -> list[GradedElement]:
        """All u*r*v of the given total weight."""
        self._check_cap(weight)
        out = []
        for rw, r in self.base_relations():
            if rw > weight:
                continue
            for lw in range(weight - rw + 1):
                for u in self._words(lw):
                    for v in self._words(weight - rw - lw):
                        out.append(GradedElement({u + w + v: c for w, c in r.terms.items()}))
        return out

    def echelon(self, weight: int) -> dict:
        """Pivot word -> reduced row (dict word -> coeff) for the weight-w ideal."""
        if weight in self._cache:
            return self._cache[weight]
        words = self.words(weight)
        index = {w: i for i, w in enumerate(words)}
        rows = []
        for r in self.relations(weight):
            row = {index[w]: c for w, c in r.terms.items()}
            if row:
                rows.append(row)
        pivots = {}
        for comp in _components(rows):
            # largest word first, so the pivot of each row is its largest word
            for p, row in row_echelon(comp, key=lambda c: -c):
                pivots[words[p]] = {words[c]: v for c, v in row.items()}
        self._cache[weight] = pivots
        return pivots

    def dimension(self, weight: int) -> int:
        return len(self.words(weight)) - len(self.echelon(weight))

    def basis(self, weight: int) -> list[tuple]:
        """Surviving (non-pivot) words, in increasing word order."""
        piv = self.echelon(weight)
        return [w for w in self.words(weight) if w not in piv]

    def dims(self, max_weight: int) -> dict[int, int]:
        return {w: self.dimension(w) for w in range(1, max_weight + 1)}

    def normal_form(self, e: GradedElement) -> GradedElement:
        by_weight: dict = {}
        for w, c in e.terms.items():
            wt = self.word_weight(w)
            if wt > self.cap:
                raise WeightCapExceeded(f"word {w} of weight {wt} exceeds the cap {self.cap}")
            by_weight.setdefault(wt, {})[w] = c
        out: dict = {}
        for wt, terms in by_weight.items():
            piv = self.echelon(wt)
            acc = dict(terms)
            # substituting a pivot only introduces smaller words, so reduce from the top down
            while True:
                live = [w for w, c in acc.items() if c and w in piv]
                if not live:
                    break
                p = max(live, key=self.word_key)
                c = acc.pop(p)
                lead = piv[p][p]
                for w, v in piv[p].items():
                    if w == p:
                        continue
                    acc[w] = acc.get(w, Cyclotomic(0)) - c * v / lead
            for w, c in acc.items():
                out[w] = out.get(w, Cyclotomic(0)) + c
        return GradedElement(out)

    def in_ideal(self, e: GradedElement) -> bool:
        return self.normal_form(e).is_zero()

    def multiply(self, a: GradedElement, b: GradedElement) -> GradedElement:
        return self.normal_form(a * b)


def _components(rows: list[dict]) -> list[list[dict]]:
    """Group rows that share columns (union-find on column indices)."""
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rows:
        cols = iter(row)
        first = find(next(cols))
        for c in cols:
            rc = find(c)
            if rc != first:
                parent[rc] = first
    groups: dict = {}
    for row in rows:
        groups.setdefault(find(next(iter(row))), []).append(row)
    return [groups[k] for k in sorted(groups)]


@lru_cache(maxsize=64)
def _quotient(gens: tuple, families: tuple, grading: str, cap: int) -> Quotient:
    return Quotient(gens, families, grading, cap)


def _q(gens, family, grading="weight", cap=DEFAULT_CAP) -> Quotient:
    return _quotient(tuple(gens), _families(family), grading, cap)


def expand_relations(gens: Sequence[Generator], family, weight: int,
                     grading: str = "weight", cap: int = DEFAULT_CAP) -> list[GradedElement]:
    return _q(gens, family, grading, cap).relations(weight)


def graded_dimension(gens: Sequence[Generator], family, weight: int,
                     grading: str = "weight", cap: int = DEFAULT_CAP) -> int:
    return _q(gens, family, grading, cap).dimension(weight)


def normal_form(e: GradedElement, gens: Sequence[Generator], family, weight_cap: int = DEFAULT_CAP,
                grading: str = "weight") -> GradedElement:
    return _q(gens, family, grading, weight_cap).normal_form(e)


def dimension_table(gens: Sequence[Generator], family, max_weight: int, name: str | None = None,
                    grading: str = "weight", cap: int = DEFAULT_CAP) -> dict:
    """JSON-ready {"family", "N", "dims"} report."""
    q = _q(gens, family, grading, cap)
    fams = _families(family)
    label = name or "+".join(f.kind for f in fams)
    return {"family": label, "N": len(gens), "dims": {str(w): d for w, d in q.dims(max_weight).items()}}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
