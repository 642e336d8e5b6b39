"""Cubic matrices, their Cayley ternary product, rho tensors and nonions."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Sequence

from .cyclotomic import (
    Cyclotomic,
    CycI,
    CycMatrix,
    CycTensor3,
    _scalar,
    format_scalar,
    omega,
    parse_scalar,
    row_echelon,
)
from .report import CheckResult

__all__ = [
    "CubicMatrix",
    "RhoTensor",
    "NonionAlgebra",
    "cayley_ternary",
    "omega_bracket",
    "cyclic_shift",
    "rho_cyclic_decompose",
    "cyclic_class",
    "rho_ternary",
    "z3_ternary_commutator",
    "matrix_ternary_commutator",
    "pauli_matrices",
    "pauli_ternary_check",
    "nonion_generators",
    "nonion_basis",
    "nonion_relation_check",
    "cayley_subalgebra_table",
    "basis_cubic_matrix",
]

W = omega()
W2 = W * W


class CubicMatrix(CycTensor3):
    """An N x N x N array a_{ijk} read as a cubic matrix."""

    __slots__ = ()

    @classmethod
    def coerce(cls, t) -> CubicMatrix:
        if isinstance(t, CubicMatrix):
            return t
        return cls(t.dim, t.entries)

    def to_json_obj(self) -> dict:
        entries = [[i + 1, j + 1, k + 1, format_scalar(v)] for (i, j, k), v in self.nonzero().items()]
        return {"dim": self.dim, "entries": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> CubicMatrix:
        n = int(obj["dim"])
        items = {}
        for entry in obj["entries"]:
            i, j, k, c = entry
            idx = (i - 1, j - 1, k - 1)
            if not all(0 <= t < n for t in idx):
                raise ValueError(f"index out of range in entry {entry}")
            items[idx] = parse_scalar(str(c))
        return cls(n, CycTensor3.from_sparse(n, items).entries)

    @classmethod
    def from_json(cls, text: str) -> CubicMatrix:
        return cls.from_json_obj(json.loads(text))


def basis_cubic_matrix(dim: int, i: int, j: int, k: int) -> CubicMatrix:
    """E_ijk: a single 1 at (i, j, k), 0-based."""
    return CubicMatrix.coerce(CycTensor3.from_sparse(dim, {(i, j, k): 1}))


def _same_dim(*ts):
    if len({t.dim for t in ts}) != 1:
        raise ValueError("cubic matrices have different dimensions")
    return ts[0].dim


def cayley_ternary(a: CycTensor3, b: CycTensor3, c: CycTensor3) -> CubicMatrix:
    """{a,b,c}_{ijk} = sum_{l,m,n} a_{nil} b_{ljm} c_{mkn}."""
    n = _same_dim(a, b, c)
    out = [Cyclotomic(0)] * n ** 3
    a_nz, b_nz, c_nz = a.nonzero(), b.nonzero(), c.nonzero()
    # index the sparse factors by their contracted indices
    b_by_l: dict = {}
    for (l, j, m), v in b_nz.items():
        b_by_l.setdefault(l, []).append((j, m, v))
    c_by_mn: dict = {}
    for (m, k, nn), v in c_nz.items():
        c_by_mn.setdefault((m, nn), []).append((k, v))
    for (nn, i, l), av in a_nz.items():
        for j, m, bv in b_by_l.get(l, ()):
            ab = av * bv
            for k, cv in c_by_mn.get((m, nn), ()):
                idx = (i * n + j) * n + k
                out[idx] = out[idx] + ab * cv
    return CubicMatrix(n, out)


def omega_bracket(a: CycTensor3, b: CycTensor3, c: CycTensor3) -> CubicMatrix:
    """[a,b,c] = {a,b,c} + w {b,c,a} + w^2 {c,a,b}."""
    return CubicMatrix.coerce(cayley_ternary(a, b, c) + cayley_ternary(b, c, a) * W + cayley_ternary(c, a, b) * W2)


def cyclic_shift(t: CycTensor3) -> CubicMatrix:
    """(S t)_{abc} = t_{bca}."""
    return CubicMatrix(t.dim, [t[b, c, a] for a, b, c in t.indices()])


def rho_cyclic_decompose(t: CycTensor3) -> tuple[CubicMatrix, CubicMatrix, CubicMatrix]:
    """Split t = t0 + t1 + t2 with S t_k = w^k t_k.

    t0 is the fully cyclic class.  t1 satisfies rho^{abc} = w^2 rho^{bca}, the
    class solving rho^{abc} + w rho^{bca} + w^2 rho^{cab} = 0 besides t0; t2 is
    its conjugate.
    """
    s1 = cyclic_shift(t)
    s2 = cyclic_shift(s1)
    parts = []
    for k in range(3):
        # P_k = (1/3) sum_j w^{-jk} S^j
        c1 = W ** (-k)
        c2 = W ** (-2 * k)
        parts.append(CubicMatrix.coerce((t + s1 * c1 + s2 * c2) * Fraction(1, 3)))
    return tuple(parts)


def cyclic_class(t: CycTensor3) -> str | None:
    """'plus', 'omega' (S t = w t), 'omega_bar' (S t = w^2 t), 'zero' or None if mixed."""
    if t.is_zero():
        return "zero"
    s = cyclic_shift(t)
    for name, lam in (("plus", Cyclotomic(1)), ("omega", W), ("omega_bar", W2)):
        if s == t * lam:
            return name
    return None


class RhoTensor:
    """A cubic matrix in one of the cyclic classes, checked on construction.

    plus: rho^{abc} = rho^{bca} = rho^{cab}
    omega: rho^{abc} = w^2 rho^{bca} = w rho^{cab}
    omega_bar: the conjugate relations
    """

    CLASSES = ("plus", "omega", "omega_bar")

    def __init__(self, tensor: CycTensor3, cls: str):
        if cls not in self.CLASSES:
            raise ValueError(f"unknown cyclicity class {cls!r}")
        found = cyclic_class(tensor)
        if found != cls and found != "zero":
            raise ValueError(f"tensor is not in the {cls} class (found {found})")
        self.tensor = CubicMatrix.coerce(tensor)
        self.cls = cls

    @property
    def dim(self) -> int:
        return self.tensor.dim

    def constraint_holds(self) -> bool:
        """rho^{abc} + w rho^{bca} + w^2 rho^{cab} = 0."""
        return rho_constraint_residual(self.tensor).is_zero()


def rho_constraint_residual(t: CycTensor3) -> CubicMatrix:
    s1 = cyclic_shift(t)
    return CubicMatrix.coerce(t + s1 * W + cyclic_shift(s1) * W2)


def rho_ternary(r1: CycTensor3, r2: CycTensor3, r3: CycTensor3) -> CubicMatrix:
    """(r1 * r2 * r3)_{abc} = sum_{d,e,f} r1_{fad} r2_{dbe} r3_{ecf}.

    This is the same contraction as the Cayley product.
    """
    return cayley_ternary(r1, r2, r3)


def z3_ternary_commutator(a: CycTensor3, b: CycTensor3, c: CycTensor3) -> CubicMatrix:
    """a*b*c + w b*c*a + w^2 c*a*b."""
    return CubicMatrix.coerce(rho_ternary(a, b, c) + rho_ternary(b, c, a) * W + rho_ternary(c, a, b) * W2)


# ---------------------------------------------------------------------------
# ordinary matrices


def matrix_ternary_commutator(a: CycMatrix, b: CycMatrix, c: CycMatrix) -> CycMatrix:
    """abc + w bca + w^2 cab for square matrices."""
    return a @ b @ c + (b @ c @ a) * W + (c @ a @ b) * W2


def pauli_matrices() -> tuple[CycMatrix, CycMatrix, CycMatrix]:
    i = CycI.i()
    s1 = CycMatrix.from_rows([[0, 1], [1, 0]])
    s2 = CycMatrix.from_rows([[0, -i], [i, 0]])
    s3 = CycMatrix.from_rows([[1, 0], [0, -1]])
    return s1, s2, s3


def pauli_ternary_check(first: int = 1, second: int = 2) -> CheckResult:
    """{s_a, s_b, s_a} = -2 s_b for two distinct Pauli matrices."""
    sig = pauli_matrices()
    a, b = sig[first - 1], sig[second - 1]
    lhs = matrix_ternary_commutator(a, b, a)
    rhs = b * -2
    return CheckResult(
        f"pauli_ternary(s{first},s{second},s{first})", lhs == rhs,
        details={"lhs": lhs.to_nested(), "rhs": rhs.to_nested()},
    )


# ---------------------------------------------------------------------------
# nonions


def nonion_generators() -> tuple[CycMatrix, CycMatrix]:
    eta1 = CycMatrix.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    eta2 = CycMatrix.from_rows([[0, 1, 0], [0, 0, W], [W2, 0, 0]])
    return eta1, eta2


class NonionAlgebra:
    """The monomials eta1^a eta2^b, a, b in {0, 1, 2}, certified independent."""

    def __init__(self):
        self.eta1, self.eta2 = nonion_generators()
        self.labels = []
        self.basis = []
        for a in range(3):
            for b in range(3):
                self.labels.append(f"eta1^{a}*eta2^{b}")
                self.basis.append((self.eta1 ** a) @ (self.eta2 ** b))
        self.rank = CycMatrix.from_rows([list(m.entries) for m in self.basis]).rank()
        if self.rank != 9:
            raise AssertionError(f"nonion monomials have rank {self.rank}, expected 9")

    def __len__(self):
        return len(self.basis)

    def element(self, label: str) -> CycMatrix:
        return self.basis[self.labels.index(label)]

    def coordinates(self, m: CycMatrix) -> list:
        """Coefficients of m on the monomial basis."""
        rows = []
        for r in range(9):
            row = {c: self.basis[c].entries[r] for c in range(9) if self.basis[c].entries[r]}
            if m.entries[r]:
                row[9] = m.entries[r]
            rows.append(row)
        coords = [Cyclotomic(0)] * 9
        for pivot, row in row_echelon(rows):
            if pivot == 9:
                raise ValueError("matrix is not in the span")
            coords[pivot] = row.get(9, Cyclotomic(0))
        return coords


def nonion_basis() -> NonionAlgebra:
    return NonionAlgebra()


def nonion_relation_check(g1: CycMatrix, g2: CycMatrix, g3: CycMatrix,
                          normalization=Fraction(1, 6)) -> CheckResult:
    """normalization * sum over orderings of g_i g_k g_m against delta_{ikm} * 1.

    delta is 1 exactly when the three arguments are the same matrix.
    """
    args = (g1, g2, g3)
    total = CycMatrix.zeros(g1.rows)
    for p in itertools.permutations(range(3)):
        total = total + args[p[0]] @ args[p[1]] @ args[p[2]]
    lhs = total * _scalar(normalization)
    delta = 1 if g1 == g2 == g3 else 0
    rhs = CycMatrix.scalar(g1.rows, delta)
    return CheckResult(
        "nonion_relation", lhs == rhs,
        details={"normalization": str(normalization), "delta": delta, "lhs": lhs.to_nested()},
    )


# ---------------------------------------------------------------------------
# closed spans of cubic matrices as ternary algebras


def cayley_subalgebra_table(basis: Sequence[CycTensor3]):
    """Structure constants of the Cayley product restricted to span(basis).

    Raises ValueError if the span is not closed or the basis is dependent.
    """
    from .ternary_products import TernaryTable

    n = len(basis)
    size = basis[0].dim ** 3
    vecs = [b.entries for b in basis]

    def rows_for(target):
        rows = []
        for r in range(size):
            row = {c: vecs[c][r] for c in range(n) if vecs[c][r]}
            if target[r]:
                row[n] = target[r]
            rows.append(row)
        return rows

    if len(row_echelon([{r: v[r] for r in range(size) if v[r]} for v in vecs])) != n:
        raise ValueError("basis cubic matrices are linearly dependent")
    items = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        prod = cayley_ternary(basis[i], basis[j], basis[k]).entries
        for pivot, row in row_echelon(rows_for(prod)):
            if pivot == n:
                raise ValueError(f"span is not closed: product ({i},{j},{k}) leaves it")
            c = row.get(n)
            if c:
                items[(pivot, i, j, k)] = c
    return TernaryTable.from_sparse(n, items)
