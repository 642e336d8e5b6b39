"""Classic ternary maps and bridges between binary and ternary algebras.

Structure constants are stored densely: a ``BinaryAlgebra`` of dimension N
keeps p^m_{ik} (so that e_i e_k = sum_m p^m_{ik} e_m) and a ``TernaryTable``
keeps m^l_{ijk}.  All indices are 0-based in Python and 1-based in JSON.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import Cyclotomic, CycMatrix, CycTensor3, _scalar, format_scalar, omega, parse_scalar
from .report import CheckResult

__all__ = [
    "BinaryAlgebra",
    "TernaryTable",
    "MinkowskiData",
    "euclid_triple",
    "minkowski_ternary",
    "ternary_from_binary",
    "strong_associativity_check",
    "binary_factorization_check",
    "binary_factorization_search",
    "sitarz_s3_table",
    "matrix_algebra",
    "compose_permutations",
    "S3_TRANSPOSITIONS",
    "SearchSpaceTooLarge",
]

ZERO = Cyclotomic(0)


class SearchSpaceTooLarge(ValueError):
    pass


def _vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vec_scale(c, x):
    return tuple(c * a for a in x)


class BinaryAlgebra:
    """Finite-dimensional algebra given by structure constants p[m, i, k] = p^m_{ik}."""

    def __init__(self, structure: CycTensor3, unit: Sequence | None = None, check_associative: bool = True):
        self.dim = structure.dim
        self.p = structure
        self.unit = None if unit is None else tuple(_scalar(u) for u in unit)
        if self.unit is not None and len(self.unit) != self.dim:
            raise ValueError("unit vector has the wrong length")
        if check_associative:
            witness = self.associativity_witness()
            if witness is not None:
                raise ValueError(f"structure constants are not associative at (i,j,k,m)={witness}")

    def associativity_witness(self):
        """First (i, j, k, m) with (e_i e_j) e_k != e_i (e_j e_k), or None."""
        n, p = self.dim, self.p
        rng = range(n)
        for i, j, k, m in itertools.product(rng, repeat=4):
            left = sum((p[r, i, j] * p[m, r, k] for r in rng), ZERO)
            right = sum((p[r, j, k] * p[m, i, r] for r in rng), ZERO)
            if left != right:
                return (i, j, k, m)
        return None

    @property
    def is_associative(self) -> bool:
        return self.associativity_witness() is None

    def basis(self, i: int) -> tuple:
        return tuple(Cyclotomic(1 if j == i else 0) for j in range(self.dim))

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        n, p = self.dim, self.p
        out = [ZERO] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k, yk in enumerate(y):
                if not yk:
                    continue
                c = xi * yk
                for m in range(n):
                    pm = p[m, i, k]
                    if pm:
                        out[m] = out[m] + c * pm
        return tuple(out)

    def to_json_obj(self) -> dict:
        entries = [[m + 1, i + 1, k + 1, format_scalar(v)] for (m, i, k), v in self.p.nonzero().items()]
        obj = {"dim": self.dim, "entries": entries}
        if self.unit is not None:
            obj["unit"] = [format_scalar(u) for u in self.unit]
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict, check_associative: bool = True) -> BinaryAlgebra:
        n = int(obj["dim"])
        items = {}
        for m, i, k, c in obj["entries"]:
            items[(m - 1, i - 1, k - 1)] = parse_scalar(str(c))
        unit = obj.get("unit")
        unit = None if unit is None else [parse_scalar(str(u)) for u in unit]
        return cls(CycTensor3.from_sparse(n, items), unit=unit, check_associative=check_associative)


def matrix_algebra(n: int) -> BinaryAlgebra:
    """The full n x n matrix algebra on the basis E_ab, index a*n + b."""
    dim = n * n
    items = {}
    for a, b, c, d in itertools.product(range(n), repeat=4):
        if b == c:
            items[(a * n + d, a * n + b, c * n + d)] = 1
    unit = [1 if a == b else 0 for a in range(n) for b in range(n)]
    return BinaryAlgebra(CycTensor3.from_sparse(dim, items), unit=unit)


class TernaryTable:
    """Trilinear product m(e_i, e_j, e_k) = sum_l m^l_{ijk} e_l."""

    def __init__(self, dim: int, entries: Sequence):
        entries = tuple(_scalar(e) for e in entries)
        if len(entries) != dim ** 4:
            raise ValueError(f"ternary table of dimension {dim} needs {dim ** 4} entries")
        self.dim = dim
        self.entries = entries

    @classmethod
    def from_function(cls, dim: int, fn) -> TernaryTable:
        """``fn(i, j, k)`` returns the coefficient vector of m(e_i, e_j, e_k)."""
        data = [ZERO] * dim ** 4
        for i, j, k in itertools.product(range(dim), repeat=3):
            vec = fn(i, j, k)
            for l, c in enumerate(vec):
                data[((l * dim + i) * dim + j) * dim + k] = c
        return cls(dim, data)

    @classmethod
    def from_sparse(cls, dim: int, items: dict) -> TernaryTable:
        data = [ZERO] * dim ** 4
        for (l, i, j, k), c in items.items():
            data[((l * dim + i) * dim + j) * dim + k] = _scalar(c)
        return cls(dim, data)

    def coeff(self, l: int, i: int, j: int, k: int):
        n = self.dim
        return self.entries[((l * n + i) * n + j) * n + k]

    def basis_product(self, i: int, j: int, k: int) -> tuple:
        return tuple(self.coeff(l, i, j, k) for l in range(self.dim))

    def apply(self, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        n = self.dim
        out = [ZERO] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                xy = xi * yj
                for k, zk in enumerate(z):
                    if not zk:
                        continue
                    c = xy * zk
                    for l in range(n):
                        m = self.coeff(l, i, j, k)
                        if m:
                            out[l] = out[l] + c * m
        return tuple(out)

    def basis(self, i: int) -> tuple:
        return tuple(Cyclotomic(1 if j == i else 0) for j in range(self.dim))

    def __eq__(self, other):
        if not isinstance(other, TernaryTable):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def nonzero(self) -> dict:
        n = self.dim
        out = {}
        for idx in itertools.product(range(n), repeat=4):
            c = self.coeff(*idx)
            if c:
                out[idx] = c
        return out

    def to_json_obj(self) -> dict:
        entries = [[l + 1, i + 1, j + 1, k + 1, format_scalar(c)] for (l, i, j, k), c in self.nonzero().items()]
        return {"dim": self.dim, "entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> TernaryTable:
        n = int(obj["dim"])
        items = {}
        for entry in obj["entries"]:
            l, i, j, k, c = entry
            idx = (l - 1, i - 1, j - 1, k - 1)
            if not all(0 <= t < n for t in idx):
                raise ValueError(f"index out of range in entry {entry}")
            items[idx] = parse_scalar(str(c))
        return cls.from_sparse(n, items)

    @classmethod
    def from_json(cls, text: str) -> TernaryTable:
        return cls.from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# section-one ternary maps


def euclid_triple(a: Sequence, b: Sequence, c: Sequence) -> Fraction:
    """a . (b x c), the determinant of the rows a, b, c."""
    a, b, c = ([Fraction(x) for x in v] for v in (a, b, c))
    cross = (b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2], b[0] * c[1] - b[1] * c[0])
    return sum((x * y for x, y in zip(a, cross)), Fraction(0))


def _levi_civita4() -> dict:
    eta = {}
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        eta[perm] = Fraction(-1 if inversions % 2 else 1)
    return eta


@dataclass(frozen=True)
class MinkowskiData:
    """Metric g^{mu nu} and volume element eta_{mu nu lambda rho}, eta_{0123} = +1 by default."""

    metric: tuple = ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
    volume_sign: int = 1

    def __post_init__(self):
        g = [[Fraction(x) for x in row] for row in self.metric]
        if len(g) != 4 or any(len(r) != 4 for r in g):
            raise ValueError("metric must be 4 x 4")
        if any(g[i][j] != g[j][i] for i in range(4) for j in range(4)):
            raise ValueError("metric must be symmetric")
        if not CycMatrix.from_rows(g).det():
            raise ValueError("metric must be invertible")
        if self.volume_sign not in (1, -1):
            raise ValueError("volume_sign must be +1 or -1")
        object.__setattr__(self, "metric", tuple(tuple(r) for r in g))

    def eta(self, mu: int, nu: int, lam: int, rho: int) -> Fraction:
        return _LEVI4.get((mu, nu, lam, rho), Fraction(0)) * self.volume_sign


_LEVI4 = _levi_civita4()


def minkowski_ternary(X: Sequence, Y: Sequence, Z: Sequence, data: MinkowskiData | None = None) -> tuple:
    """U^mu = g^{mu sigma} eta_{sigma nu lambda rho} X^nu Y^lambda Z^rho."""
    data = data or MinkowskiData()
    X, Y, Z = ([Fraction(v) for v in vec] for vec in (X, Y, Z))
    lowered = []
    for sigma in range(4):
        s = Fraction(0)
        for (sg, nu, lam, rho), sign in _LEVI4.items():
            if sg == sigma:
                s += sign * data.volume_sign * X[nu] * Y[lam] * Z[rho]
        lowered.append(s)
    return tuple(sum((data.metric[mu][sigma] * lowered[sigma] for sigma in range(4)), Fraction(0)) for mu in range(4))


# ---------------------------------------------------------------------------
# ternary products from binary ones

VARIANTS = ("trivial", "symmetric", "omega_skew")


def ternary_from_binary(alg: BinaryAlgebra, variant: str = "trivial") -> TernaryTable:
    """Ternary table of XYZ, XYZ+YZX+ZXY or XYZ + w YZX + w^2 ZXY."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    if not alg.is_associative:
        raise ValueError("ternary products are only derived from associative algebras")
    w = omega()
    weights = {"trivial": (1, 0, 0), "symmetric": (1, 1, 1), "omega_skew": (1, w, w * w)}[variant]

    def triple(x, y, z):
        return alg.mul(alg.mul(x, y), z)

    def product(i, j, k):
        x, y, z = alg.basis(i), alg.basis(j), alg.basis(k)
        out = _vec_scale(weights[0], triple(x, y, z))
        if weights[1]:
            out = _vec_add(out, _vec_scale(weights[1], triple(y, z, x)))
        if weights[2]:
            out = _vec_add(out, _vec_scale(weights[2], triple(z, x, y)))
        return out

    return TernaryTable.from_function(alg.dim, product)


def strong_associativity_check(t: TernaryTable) -> CheckResult:
    """m(X,m(S,Y,T),Z) = m(m(X,S,Y),T,Z) = m(X,S,m(Y,T,Z)) on all basis 5-tuples."""
    n = t.dim
    prod = {idx: t.basis_product(*idx) for idx in itertools.product(range(n), repeat=3)}
    for x, s, y, tt, z in itertools.product(range(n), repeat=5):
        e = t.basis
        middle = t.apply(e(x), prod[(s, y, tt)], e(z))
        left = t.apply(prod[(x, s, y)], e(tt), e(z))
        right = t.apply(e(x), e(s), prod[(y, tt, z)])
        if not (middle == left == right):
            return CheckResult(
                "strong_associativity", False,
                witness={"X": x, "S": s, "Y": y, "T": tt, "Z": z},
                details={"middle": [str(c) for c in middle], "left": [str(c) for c in left],
                         "right": [str(c) for c in right]},
            )
    return CheckResult("strong_associativity", True)


def binary_factorization_check(m: TernaryTable, p: BinaryAlgebra) -> bool:
    """True iff m^i_{jkl} = sum_r p^r_{kl} p^i_{jr} for all indices."""
    if m.dim != p.dim:
        raise ValueError("ternary and binary structures have different dimensions")
    n = m.dim
    rng = range(n)
    for i, j, k, l in itertools.product(rng, repeat=4):
        rhs = sum((p.p[r, k, l] * p.p[i, j, r] for r in rng), ZERO)
        if m.coeff(i, j, k, l) != rhs:
            return False
    return True


def binary_factorization_search(m: TernaryTable, alphabet: Sequence, limit: int = 10 ** 7) -> BinaryAlgebra | None:
    """First binary law with entries in ``alphabet`` that factorizes ``m``.

    Candidates are enumerated lexicographically over the flattened constants
    p[m, i, k] in the order the alphabet is given.
    """
    n = m.dim
    alphabet = [_scalar(a) for a in alphabet]
    count = len(alphabet) ** (n ** 3)
    if count > limit:
        raise SearchSpaceTooLarge(f"{count} candidates exceed the limit of {limit}")
    for values in itertools.product(alphabet, repeat=n ** 3):
        cand = BinaryAlgebra(CycTensor3(n, values), check_associative=False)
        if binary_factorization_check(m, cand):
            return cand
    return None


# ---------------------------------------------------------------------------
# the odd part of the group algebra of S3

S3_TRANSPOSITIONS = ((1, 0, 2), (2, 1, 0), (0, 2, 1))  # (12), (13), (23) as images of 0, 1, 2
TRANSPOSITION_NAMES = ("(12)", "(13)", "(23)")


def compose_permutations(*perms: tuple) -> tuple:
    """(s o t)(x) = s(t(x)): the rightmost permutation acts first."""
    n = len(perms[0])
    result = tuple(range(n))
    for p in reversed(perms):
        result = tuple(p[result[x]] for x in range(n))
    return result


def sitarz_s3_table() -> TernaryTable:
    """t(a, b, c) = a o b o c on the three transpositions of S3."""
    index = {p: i for i, p in enumerate(S3_TRANSPOSITIONS)}
    items = {}
    for i, j, k in itertools.product(range(3), repeat=3):
        prod = compose_permutations(S3_TRANSPOSITIONS[i], S3_TRANSPOSITIONS[j], S3_TRANSPOSITIONS[k])
        if prod not in index:
            raise AssertionError(f"product {prod} is not a transposition")
        items[(index[prod], i, j, k)] = 1
    return TernaryTable.from_sparse(3, items)
