"""Symplectic and orthogonal triple systems, R-matrices and the Yang-Baxter equation.

A triple system is a space V with a form <e_i, e_k> = g_ik = eps g_ki and a
triple product {e_i, e_k, e_m} = C^j_ikm e_j.  Its R-matrix is
R^ab_cd = <e^a, {e^b, e_c, e_d}>, indices raised with the inverse form.

R-matrices are stored as N^2 x N^2 matrices acting on V (x) V, with row
(a, b) -> a*N + b and column (c, d) -> c*N + d, so that entry
[(a, b), (c, d)] is R^ab_cd.  Internally every index is 0-based; the JSON
formats and reported witnesses are 1-based.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cyclotomic import Cyclotomic, CycMatrix, _scalar, format_scalar, parse_scalar
from .report import CheckResult

__all__ = [
    "TripleSystem",
    "RMatrix",
    "RFamily",
    "axioms_check",
    "orthogonal_model",
    "zero_system",
    "r_from_triple",
    "triple_from_r",
    "flip",
    "embed12",
    "embed23",
    "embed13",
    "yb_check_constant",
    "yb_check_braid",
    "yb_check_spectral",
    "spectral_check_all",
    "symmetry_check",
    "ternary_yb_check",
    "hilbert_ternary",
    "hilbert_system",
    "apply_operator_ternary",
    "quantum_sl2_r",
    "random_r",
    "yb_test_set",
    "MissingParameter",
]

ZERO = Cyclotomic(0)


class MissingParameter(KeyError):
    pass


def _rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# triple systems


@dataclass
class TripleSystem:
    dim: int
    epsilon: int
    lambda0: Fraction
    g: CycMatrix
    C: dict = field(default_factory=dict)  # (j, i, k, m) -> coefficient of e_j in {e_i, e_k, e_m}

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if self.g.shape != (self.dim, self.dim):
            raise ValueError(f"form must be {self.dim} x {self.dim}")
        self.lambda0 = _rational(self.lambda0)
        clean = {}
        for key, c in self.C.items():
            if len(key) != 4 or not all(0 <= x < self.dim for x in key):
                raise ValueError(f"bad structure-constant index {key}")
            c = _scalar(c)
            if c:
                clean[tuple(key)] = c
        self.C = clean
        self._ginv = None
        self._table = None

    @property
    def ginv(self) -> CycMatrix:
        """g^{jk}; ValueError if the form is degenerate."""
        if self._ginv is None:
            if self.g.rank() != self.dim:
                raise ValueError("the bilinear form is degenerate")
            self._ginv = self.g.inverse()
        return self._ginv

    def table(self) -> dict:
        """(i, k, m) -> {j: C^j_ikm}."""
        if self._table is None:
            t: dict = {}
            for (j, i, k, m), c in self.C.items():
                t.setdefault((i, k, m), {})[j] = c
            self._table = t
        return self._table

    def basis_product(self, i: int, k: int, m: int) -> list:
        out = [ZERO] * self.dim
        for j, c in self.table().get((i, k, m), {}).items():
            out[j] = c
        return out

    def product(self, x: Sequence, y: Sequence, z: Sequence) -> list:
        """{x, y, z} for coordinate vectors."""
        out = [ZERO] * self.dim
        for (i, k, m), col in self.table().items():
            w = x[i] * y[k] * z[m]
            if w:
                for j, c in col.items():
                    out[j] = out[j] + w * c
        return out

    def form(self, x: Sequence, y: Sequence):
        s = ZERO
        for i in range(self.dim):
            if x[i]:
                for k in range(self.dim):
                    if y[k]:
                        s = s + x[i] * self.g[i, k] * y[k]
        return s

    def unit(self, i: int) -> list:
        return [Cyclotomic(int(j == i)) for j in range(self.dim)]

    def dual(self, a: int) -> list:
        """Coordinates of e^a = g^{ab} e_b."""
        return [self.ginv[a, b] for b in range(self.dim)]

    def scaled(self, factor) -> TripleSystem:
        f = _scalar(factor)
        return TripleSystem(self.dim, self.epsilon, self.lambda0, self.g,
                            {k: c * f for k, c in self.C.items()})

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "epsilon": self.epsilon,
            "lambda0": str(self.lambda0),
            "g": self.g.to_nested(),
            "C": [[j + 1, i + 1, k + 1, m + 1, format_scalar(c)]
                  for (j, i, k, m), c in sorted(self.C.items())],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> TripleSystem:
        try:
            dim = int(obj["dim"])
            g = CycMatrix.from_nested(obj["g"])
            C = {}
            for row in obj["C"]:
                j, i, k, m, c = row
                key = (int(j) - 1, int(i) - 1, int(k) - 1, int(m) - 1)
                C[key] = C.get(key, ZERO) + parse_scalar(str(c))
            return cls(dim, int(obj["epsilon"]), Fraction(str(obj["lambda0"])), g, C)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed triple system: {exc}") from exc


def zero_system(n: int, epsilon: int = 1) -> TripleSystem:
    return TripleSystem(n, epsilon, Fraction(0), CycMatrix.identity(n), {})


def orthogonal_model(n: int, lambda0=1, g: CycMatrix | None = None) -> TripleSystem:
    """{x, y, z} = lambda0 (<y, z> x - <z, x> y) for a symmetric form g (default identity)."""
    g = CycMatrix.identity(n) if g is None else g
    if g != g.T:
        raise ValueError("the orthogonal model needs a symmetric form")
    lam = _scalar(_rational(lambda0))
    C: dict = {}
    for i, k, m in itertools.product(range(n), repeat=3):
        # C^j_ikm = lambda0 (g_km delta^j_i - g_mi delta^j_k)
        for j, c in ((i, g[k, m]), (k, -g[m, i])):
            if c:
                C[(j, i, k, m)] = C.get((j, i, k, m), ZERO) + lam * c
    return TripleSystem(n, 1, _rational(lambda0), g, C)


def _vec_add(*vs):
    out = list(vs[0])
    for v in vs[1:]:
        out = [a + b for a, b in zip(out, v)]
    return out


def _vec_scale(c, x):
    return [c * a for a in x]


def axioms_check(ts: TripleSystem) -> list[CheckResult]:
    """Axioms a)-e) on all basis tuples, each with its lexicographically first counterexample."""
    n, eps, lam = ts.dim, ts.epsilon, _scalar(ts.lambda0)
    e = [ts.unit(i) for i in range(n)]
    P = ts.product

    def first(name, arity, bad):
        for idx in itertools.product(range(n), repeat=arity):
            if bad(*idx):
                return CheckResult(name, False, witness=[i + 1 for i in idx])
        return CheckResult(name, True)

    res = [
        first("axiom_a", 2, lambda x, y: ts.g[y, x] != ts.g[x, y] * eps),
        first("axiom_b", 3, lambda x, y, z: P(e[y], e[x], e[z]) != _vec_scale(-eps, P(e[x], e[y], e[z]))),
        first("axiom_c", 4, lambda u, v, x, y:
              ts.form(P(e[u], e[v], e[x]), e[y]) != -ts.form(e[x], P(e[u], e[v], e[y]))),
    ]

    def bad_d(u, v, x, y, z):
        lhs = P(e[u], e[v], P(e[x], e[y], e[z]))
        rhs = _vec_add(P(P(e[u], e[v], e[x]), e[y], e[z]),
                       P(e[x], P(e[u], e[v], e[y]), e[z]),
                       P(e[x], e[y], P(e[u], e[v], e[z])))
        return lhs != rhs

    res.append(first("axiom_d", 5, bad_d))

    def bad_e(x, y, z):
        lhs = _vec_add(P(e[x], e[y], e[z]), _vec_scale(eps, P(e[x], e[z], e[y])))
        rhs = _vec_add(_vec_scale(2 * lam * ts.g[y, z], e[x]),
                       _vec_scale(-lam * ts.g[x, y], e[z]),
                       _vec_scale(-lam * ts.g[z, x], e[y]))
        return lhs != rhs

    res.append(first("axiom_e", 3, bad_e))
    return res


# ---------------------------------------------------------------------------
# R-matrices


@dataclass(frozen=True)
class RMatrix:
    dim: int
    matrix: CycMatrix

    def __post_init__(self):
        n2 = self.dim * self.dim
        if self.matrix.shape != (n2, n2):
            raise ValueError(f"R-matrix must be {n2} x {n2}")

    @classmethod
    def from_function(cls, n: int, fn) -> RMatrix:
        """fn(a, b, c, d) = R^ab_cd."""
        return cls(n, CycMatrix.from_function(
            n * n, n * n, lambda r, s: fn(r // n, r % n, s // n, s % n)))

    @classmethod
    def identity(cls, n: int) -> RMatrix:
        return cls(n, CycMatrix.identity(n * n))

    def entry(self, a: int, b: int, c: int, d: int):
        n = self.dim
        return self.matrix[a * n + b, c * n + d]

    def __matmul__(self, other: RMatrix) -> RMatrix:
        return RMatrix(self.dim, self.matrix @ other.matrix)

    def __add__(self, other: RMatrix) -> RMatrix:
        return RMatrix(self.dim, self.matrix + other.matrix)

    def __mul__(self, scalar) -> RMatrix:
        return RMatrix(self.dim, self.matrix * scalar)

    def to_json_obj(self) -> dict:
        return {"dim": self.dim, "R": self.matrix.to_nested()}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> RMatrix:
        try:
            return cls(int(obj["dim"]), CycMatrix.from_nested(obj["R"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed R-matrix: {exc}") from exc


class RFamily(dict):
    """theta -> RMatrix over exact rational parameters."""

    def __init__(self, items=()):
        super().__init__()
        for theta, R in dict(items).items():
            key = _rational(theta)
            if key in self:
                raise ValueError(f"duplicate parameter {key}")
            self[key] = R

    @classmethod
    def constant(cls, R: RMatrix, thetas) -> RFamily:
        return cls({t: R for t in thetas})

    def at(self, theta) -> RMatrix:
        key = _rational(theta)
        if key not in self:
            raise MissingParameter(str(key))
        return self[key]

    def to_json_obj(self) -> dict:
        dims = {R.dim for R in self.values()}
        return {"dim": dims.pop() if len(dims) == 1 else None,
                "family": {str(t): R.matrix.to_nested() for t, R in sorted(self.items())}}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> RFamily:
        try:
            n = int(obj["dim"])
            return cls({Fraction(str(t)): RMatrix(n, CycMatrix.from_nested(m))
                        for t, m in obj["family"].items()})
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed R family: {exc}") from exc


def r_from_triple(ts: TripleSystem) -> RMatrix:
    """R^ij_km = <e^i, {e^j, e_k, e_m}>."""
    n = ts.dim
    duals = [ts.dual(a) for a in range(n)]
    e = [ts.unit(a) for a in range(n)]

    def entry(i, j, k, m):
        return ts.form(duals[i], ts.product(duals[j], e[k], e[m]))

    return RMatrix.from_function(n, entry)


def triple_from_r(R: RMatrix, g: CycMatrix | None = None, epsilon: int = 1, lambda0=0) -> TripleSystem:
    """The triple product whose R-matrix is R: C^a_jcd = g_jb R^ab_cd."""
    n = R.dim
    g = CycMatrix.identity(n) if g is None else g
    C = {}
    for a, j, c, d in itertools.product(range(n), repeat=4):
        v = ZERO
        for b in range(n):
            v = v + g[j, b] * R.entry(a, b, c, d)
        if v:
            C[(a, j, c, d)] = v
    return TripleSystem(n, epsilon, _rational(lambda0), g, C)


def flip(n: int) -> RMatrix:
    """P(x (x) y) = y (x) x."""
    return RMatrix.from_function(n, lambda a, b, c, d: int(a == d and b == c))


def embed12(R: RMatrix) -> CycMatrix:
    return R.matrix.kron(CycMatrix.identity(R.dim))


def embed23(R: RMatrix) -> CycMatrix:
    return CycMatrix.identity(R.dim).kron(R.matrix)


def embed13(R: RMatrix) -> CycMatrix:
    """R acting on factors 1 and 3, conjugated by the swap of factors 2 and 3."""
    P23 = CycMatrix.identity(R.dim).kron(flip(R.dim).matrix)
    return P23 @ embed12(R) @ P23


def yb_check_constant(R: RMatrix) -> bool:
    """R12 R13 R23 = R23 R13 R12."""
    r12, r13, r23 = embed12(R), embed13(R), embed23(R)
    return r12 @ r13 @ r23 == r23 @ r13 @ r12


def yb_check_braid(Rt: RMatrix) -> bool:
    """Rt23 Rt12 Rt23 = Rt12 Rt23 Rt12."""
    r12, r23 = embed12(Rt), embed23(Rt)
    return r23 @ r12 @ r23 == r12 @ r23 @ r12


def _spectral_sides(R1: RMatrix, R2: RMatrix, R3: RMatrix):
    """Both sides of the spectral equation with R1 = R(theta), R2 = R(theta'), R3 = R(theta'').

    Returned as dicts (a2, b2, c2, a1, b1, c1) -> value; summed indices are
    a', b', c'.
    """
    n = R1.dim
    rng = range(n)
    lhs, rhs = {}, {}
    for a1, b1, c1, a2, b2, c2 in itertools.product(rng, repeat=6):
        s = t = ZERO
        for ap, bp, cp in itertools.product(rng, repeat=3):
            x = R1.entry(bp, ap, a1, b1)
            if x:
                y = R2.entry(cp, a2, ap, c1)
                if y:
                    s = s + x * y * R3.entry(c2, b2, bp, cp)
            x = R3.entry(cp, bp, b1, c1)
            if x:
                y = R2.entry(c2, ap, a1, cp)
                if y:
                    t = t + x * y * R1.entry(b2, a2, ap, bp)
        key = (a2, b2, c2, a1, b1, c1)
        lhs[key], rhs[key] = s, t
    return lhs, rhs


def yb_check_spectral(fam: RFamily, theta, theta2) -> CheckResult:
    """The parameter-dependent equation with theta' = theta + theta''."""
    t1, t3 = _rational(theta), _rational(theta2)
    t2 = t1 + t3
    R1, R2, R3 = fam.at(t1), fam.at(t2), fam.at(t3)
    lhs, rhs = _spectral_sides(R1, R2, R3)
    params = {"theta": str(t1), "theta'": str(t2), "theta''": str(t3)}
    for key in sorted(lhs):
        if lhs[key] != rhs[key]:
            a2, b2, c2, a1, b1, c1 = (i + 1 for i in key)
            return CheckResult("yang_baxter_spectral", False,
                               witness={**params, "upper": [a2, b2, c2], "lower": [a1, b1, c1],
                                        "lhs": str(lhs[key]), "rhs": str(rhs[key])})
    return CheckResult("yang_baxter_spectral", True, details=params)


def _admissible_pairs(keys):
    ks = sorted(keys)
    return [(a, b) for a in ks for b in ks if a + b in keys]


def spectral_check_all(fam: RFamily) -> list[CheckResult]:
    """Every (theta, theta'') with theta, theta'' and their sum all in the family."""
    return [yb_check_spectral(fam, a, b) for a, b in _admissible_pairs(fam.keys())]


def symmetry_check(R: RMatrix) -> bool:
    """R^ba_dc = R^ab_cd."""
    n = R.dim
    return all(R.entry(b, a, d, c) == R.entry(a, b, c, d)
               for a, b, c, d in itertools.product(range(n), repeat=4))


def ternary_yb_check(fam: Mapping, theta, theta2) -> CheckResult:
    """sum_a {v, {u, e_a, z}_theta', {e^a, x, y}_theta}_theta''
         = sum_a {u, {v, e_a, x}_theta', {e^a, z, y}_theta''}_theta

    ``fam`` maps theta to TripleSystem; e^a = g^{ab} e_b uses the form of the
    theta entry, so all members must share the same form.
    """
    t1, t3 = _rational(theta), _rational(theta2)
    t2 = t1 + t3
    try:
        S1, S2, S3 = fam[t1], fam[t2], fam[t3]
    except KeyError as exc:
        raise MissingParameter(str(exc.args[0])) from None
    if not (S1.g == S2.g == S3.g):
        raise ValueError("family members must share one bilinear form")
    n = S1.dim
    e = [S1.unit(a) for a in range(n)]
    duals = [S1.dual(a) for a in range(n)]
    params = {"theta": str(t1), "theta'": str(t2), "theta''": str(t3)}
    for u, v, x, y, z in itertools.product(range(n), repeat=5):
        lhs = [ZERO] * n
        rhs = [ZERO] * n
        for a in range(n):
            lhs = _vec_add(lhs, S3.product(e[v], S2.product(e[u], e[a], e[z]), S1.product(duals[a], e[x], e[y])))
            rhs = _vec_add(rhs, S1.product(e[u], S2.product(e[v], e[a], e[x]), S3.product(duals[a], e[z], e[y])))
        if lhs != rhs:
            return CheckResult("ternary_yang_baxter", False,
                               witness={**params, "uvxyz": [u + 1, v + 1, x + 1, y + 1, z + 1],
                                        "lhs": [str(c) for c in lhs], "rhs": [str(c) for c in rhs]})
    return CheckResult("ternary_yang_baxter", True, details=params)


# ---------------------------------------------------------------------------
# the ternary product of a Hilbert space basis


def hilbert_ternary(i: int, j: int, k: int, dim: int) -> list:
    """m(e_i, e_j, e_k) = |e_i><e_j|e_k> = delta_jk e_i, as coordinates (indices 1-based)."""
    if not all(1 <= x <= dim for x in (i, j, k)):
        raise ValueError(f"basis indices must lie in 1..{dim}")
    return [Cyclotomic(int(n == i and j == k)) for n in range(1, dim + 1)]


def hilbert_system(dim: int) -> TripleSystem:
    """C^n_ijk = delta_jk delta^n_i with the standard form."""
    C = {(i, i, j, j): 1 for i in range(dim) for j in range(dim)}
    return TripleSystem(dim, 1, Fraction(0), CycMatrix.identity(dim), C)


def apply_operator_ternary(a: CycMatrix, c: Sequence) -> list:
    """A|x> written as sum_{i,k,m} a_ik c_m m(e_i, e_k, e_m)."""
    n = a.rows
    out = [ZERO] * n
    for i, k, m in itertools.product(range(n), repeat=3):
        w = a[i, k] * _scalar(c[m])
        if w:
            out = _vec_add(out, _vec_scale(w, hilbert_ternary(i + 1, k + 1, m + 1, n)))
    return out


# ---------------------------------------------------------------------------
# known solutions and random test data


def quantum_sl2_r(q) -> RMatrix:
    """The standard two-dimensional solution of R12 R13 R23 = R23 R13 R12, q != 0 rational."""
    q = _rational(q)
    if q == 0:
        raise ValueError("q must be nonzero")

    def entry(a, b, c, d):
        if (a, b) == (c, d):
            return q if a == b else 1
        if a == d and b == c and a > b:
            return q - 1 / q
        return 0

    return RMatrix.from_function(2, entry)


def random_r(rng: random.Random, n: int = 2, bound: int = 3, density: float = 0.5) -> RMatrix:
    def entry(*_):
        return rng.randint(-bound, bound) if rng.random() < density else 0
    return RMatrix.from_function(n, entry)


def _random_invertible(rng: random.Random, n: int) -> CycMatrix:
    while True:
        A = CycMatrix.from_function(n, n, lambda i, j: rng.randint(-2, 2))
        if A.det():
            return A


def yb_test_set(seed: int = 0, count: int = 20, n: int = 2) -> list[RMatrix]:
    """Mixed test matrices: half conjugated known solutions, half random ones.

    A (x) A commutes with the flip, so (A (x) A) R (A (x) A)^-1 solves the
    equation whenever R does; random matrices almost never do.
    """
    rng = random.Random(seed)
    seeds = [RMatrix.identity(n), flip(n)]
    if n == 2:
        seeds += [quantum_sl2_r(Fraction(2)), quantum_sl2_r(Fraction(-1, 3))]
    out = []
    for t in range(count):
        if t % 2 == 0:
            base = seeds[(t // 2) % len(seeds)]
            A = _random_invertible(rng, n)
            AA = A.kron(A)
            out.append(RMatrix(n, AA @ base.matrix @ AA.inverse()))
        else:
            out.append(random_r(rng, n))
    return out
