"""Z3-graded block operators, the cubic Clifford relation and the polynomial Clifford algebra.

Block patterns on 3 x 3 block matrices with square blocks (alpha, beta, gamma):

    degree 0: diag(alpha, beta, gamma)
    degree 1: [[0, alpha, 0], [0, 0, beta], [gamma, 0, 0]]
    degree 2: [[0, 0, gamma], [beta, 0, 0], [0, alpha, 0]]
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cubic_matrix import CubicMatrix, nonion_generators, rho_constraint_residual
from .cyclotomic import Cyclotomic, CycI, CycMatrix, _scalar, omega
from .report import CheckResult

__all__ = [
    "GradedBlockMatrix",
    "GradedState",
    "PolyCliffordRep",
    "PatternMismatch",
    "PATTERNS",
    "graded_product",
    "graded_scalar_product",
    "expectation",
    "observable_combinations",
    "observable_words",
    "random_graded_matrix",
    "random_state",
    "confinement_check",
    "cubic_clifford_check",
    "solve_rho",
    "s3_symmetrizer",
    "poly_clifford_check",
    "w_vectors",
    "lorentz_generators",
    "lorentz_forms_check",
    "lorentz_commutator_check",
    "dirac_cube_check",
    "dirac_gammas",
    "block_rep",
    "omega_rescaled",
    "pt_reflected",
    "component_scalar_product",
    "nonion_gtilde",
]

W = omega()
W2 = W * W
I_UNIT = CycI.i()

# degree -> ((row, col) of alpha, beta, gamma)
PATTERNS = {
    0: ((0, 0), (1, 1), (2, 2)),
    1: ((0, 1), (1, 2), (2, 0)),
    2: ((2, 1), (1, 0), (0, 2)),
}


class PatternMismatch(ValueError):
    pass


def _block_matrix(blocks: dict, d_rows: int, d_cols: int) -> CycMatrix:
    """Assemble a 3 x 3 grid of (d_rows x d_cols) blocks given as {(r, c): CycMatrix}."""
    def entry(i, j):
        b = blocks.get((i // d_rows, j // d_cols))
        return b[i % d_rows, j % d_cols] if b is not None else 0
    return CycMatrix.from_function(3 * d_rows, 3 * d_cols, entry)


def _block(M: CycMatrix, r: int, c: int, d_rows: int, d_cols: int) -> CycMatrix:
    return CycMatrix.from_function(d_rows, d_cols, lambda i, j: M[r * d_rows + i, c * d_cols + j])


@dataclass(frozen=True)
class GradedBlockMatrix:
    degree: int
    blocks: tuple  # (alpha, beta, gamma)

    def __post_init__(self):
        if self.degree not in PATTERNS:
            raise ValueError("degree must be 0, 1 or 2")
        if len(self.blocks) != 3:
            raise ValueError("need three blocks")
        shapes = {b.shape for b in self.blocks}
        if len(shapes) != 1 or (s := shapes.pop())[0] != s[1]:
            raise ValueError("blocks must be square of one common size")

    @property
    def inner_dim(self) -> int:
        return self.blocks[0].rows

    def to_matrix(self) -> CycMatrix:
        d = self.inner_dim
        return _block_matrix(dict(zip(PATTERNS[self.degree], self.blocks)), d, d)

    @classmethod
    def from_matrix(cls, M: CycMatrix, degree: int) -> GradedBlockMatrix:
        """Read M in the given pattern; PatternMismatch if a block outside it is nonzero."""
        if M.rows != M.cols or M.rows % 3:
            raise ValueError("expected a square matrix of size 3d")
        d = M.rows // 3
        spots = PATTERNS[degree]
        for r, c in itertools.product(range(3), repeat=2):
            if (r, c) not in spots and not _block(M, r, c, d, d).is_zero():
                raise PatternMismatch(f"block ({r + 1},{c + 1}) is nonzero outside the degree-{degree} pattern")
        return cls(degree, tuple(_block(M, r, c, d, d) for r, c in spots))

    @classmethod
    def identity(cls, d: int) -> GradedBlockMatrix:
        return cls(0, (CycMatrix.identity(d),) * 3)

    def __matmul__(self, other: GradedBlockMatrix) -> GradedBlockMatrix:
        return graded_product(self, other)


def graded_product(a: GradedBlockMatrix, b: GradedBlockMatrix) -> GradedBlockMatrix:
    """The 3d x 3d product read back in the pattern of degree a + b mod 3."""
    if a.inner_dim != b.inner_dim:
        raise ValueError("inner dimensions differ")
    return GradedBlockMatrix.from_matrix(a.to_matrix() @ b.to_matrix(), (a.degree + b.degree) % 3)


@dataclass(frozen=True)
class GradedState:
    """|Psi> in the degree-1 pattern with column-vector blocks psi1, psi2, psi3."""

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(_scalar(x) for x in v) for v in self.components)
        if len(comps) != 3 or len({len(v) for v in comps}) != 1 or not comps[0]:
            raise ValueError("need three component vectors of one common nonzero length")
        object.__setattr__(self, "components", comps)

    @property
    def inner_dim(self) -> int:
        return len(self.components[0])

    def ket(self) -> CycMatrix:
        d = self.inner_dim
        cols = [CycMatrix(d, 1, v) for v in self.components]
        return _block_matrix(dict(zip(PATTERNS[1], cols)), d, 1)

    def bra(self) -> CycMatrix:
        """The conjugate transpose, which lands in the degree-2 pattern of row vectors."""
        return self.ket().adjoint()


def _inner(phi: Sequence, psi: Sequence):
    s = Cyclotomic(0)
    for a, b in zip(phi, psi):
        s = a.conjugate() * b + s
    return s


def graded_scalar_product(phi: GradedState, psi: GradedState):
    """Tr(<Phi| |Psi>), a 3 x 3 trace."""
    if phi.inner_dim != psi.inner_dim:
        raise ValueError("states have different dimensions")
    return (phi.bra() @ psi.ket()).trace()


def component_scalar_product(phi: GradedState, psi: GradedState):
    """<phi1|psi1> + <phi2|psi2> + <phi3|psi3>."""
    s = Cyclotomic(0)
    for a, b in zip(phi.components, psi.components):
        s = _inner(a, b) + s
    return s


def expectation(state: GradedState, op: GradedBlockMatrix):
    """Tr(<Psi| op |Psi>)."""
    if state.inner_dim != op.inner_dim:
        raise ValueError("state and operator dimensions differ")
    return (state.bra() @ op.to_matrix() @ state.ket()).trace()


def observable_combinations(Q: GradedBlockMatrix | None = None, Qbar: GradedBlockMatrix | None = None,
                            max_length: int = 3) -> list[tuple[str, int]]:
    """Every word of length 1..max_length in Q (degree 1) and Qbar (degree 2) with its degree.

    With matrices supplied the degree of each word is confirmed by multiplying
    them out and reading the product in the predicted pattern.
    """
    if (Q is None) != (Qbar is None):
        raise ValueError("give both Q and Qbar or neither")
    if Q is not None and (Q.degree, Qbar.degree) != (1, 2):
        raise ValueError("Q must have degree 1 and Qbar degree 2")
    letters = {"Q": 1, "Qbar": 2}
    out = []
    for n in range(1, max_length + 1):
        for word in itertools.product(letters, repeat=n):
            deg = sum(letters[x] for x in word) % 3
            if Q is not None:
                mats = {"Q": Q, "Qbar": Qbar}
                prod = mats[word[0]]
                for x in word[1:]:
                    prod = graded_product(prod, mats[x])
                if prod.degree != deg:
                    raise AssertionError("degree arithmetic failed")
            out.append((" ".join(word), deg))
    return out


def observable_words(max_length: int = 3) -> list[str]:
    """Words of degree 0, the only ones with a chance of a nonzero expectation."""
    return [w for w, d in observable_combinations(max_length=max_length) if d == 0]


def _random_scalar(rng: random.Random, bound: int = 3):
    return Cyclotomic(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_graded_matrix(rng: random.Random, degree: int, d: int) -> GradedBlockMatrix:
    return GradedBlockMatrix(degree, tuple(
        CycMatrix.from_function(d, d, lambda i, j: _random_scalar(rng)) for _ in range(3)))


def random_state(rng: random.Random, d: int) -> GradedState:
    return GradedState(tuple(tuple(_random_scalar(rng) for _ in range(d)) for _ in range(3)))


def confinement_check(dim: int = 3, trials: int = 100, seed: int = 0) -> list[CheckResult]:
    """Zero expectation of degree-1 and degree-2 operators, and degree addition on all nine pairs."""
    if dim < 1 or trials < 1:
        raise ValueError("dim and trials must be positive")
    rng = random.Random(seed)
    out = []
    for degree in (1, 2):
        res = CheckResult(f"expectation_vanishes_degree{degree}", True, details={"trials": trials, "dim": dim})
        for t in range(trials):
            d = rng.randint(1, dim)
            psi = random_state(rng, d)
            op = random_graded_matrix(rng, degree, d)
            val = expectation(psi, op)
            if val:
                res = CheckResult(res.name, False, witness={"trial": t, "value": str(val)})
                break
        out.append(res)
    bad = None
    for da, db in itertools.product(range(3), repeat=2):
        d = rng.randint(1, dim)
        try:
            graded_product(random_graded_matrix(rng, da, d), random_graded_matrix(rng, db, d))
        except PatternMismatch as exc:
            bad = {"degrees": [da, db], "error": str(exc)}
            break
    out.append(CheckResult("degree_arithmetic", bad is None, witness=bad, details={"pairs": 9}))
    return out


# ---------------------------------------------------------------------------
# cubic Clifford relation


def _cubic_lhs(Qs, a, b, c) -> CycMatrix:
    """Q^a Q^b Q^c - w Q^b Q^c Q^a - w^2 Q^c Q^a Q^b, which should be 3 rho^{abc} 1."""
    return Qs[a] @ Qs[b] @ Qs[c] - (Qs[b] @ Qs[c] @ Qs[a]) * W - (Qs[c] @ Qs[a] @ Qs[b]) * W2


def _check_square(mats):
    shapes = {m.shape for m in mats}
    if len(shapes) != 1 or (s := shapes.pop())[0] != s[1]:
        raise ValueError("matrices must be square of one common size")


def solve_rho(Qs: Sequence[CycMatrix]) -> CubicMatrix | None:
    """The rho forced by the Q's, or None when some combination is not a scalar matrix."""
    _check_square(Qs)
    n = len(Qs)
    vals = []
    for a, b, c in itertools.product(range(n), repeat=3):
        s = _cubic_lhs(Qs, a, b, c).scalar_value()
        if s is None:
            return None
        vals.append(s * Fraction(1, 3))
    return CubicMatrix(n, vals)


def cubic_clifford_check(Qs: Sequence[CycMatrix], rho) -> CheckResult:
    """Q^a Q^b Q^c = w Q^b Q^c Q^a + w^2 Q^c Q^a Q^b + 3 rho^{abc} 1 plus the constraint on rho."""
    _check_square(Qs)
    n = len(Qs)
    if rho.dim != n:
        raise ValueError("rho must have one index per generator")
    size = Qs[0].rows
    residual = rho_constraint_residual(rho)
    if not residual.is_zero():
        (a, b, c), v = next(iter(residual.nonzero().items()))
        return CheckResult("cubic_clifford", False, witness={"constraint": [a + 1, b + 1, c + 1], "value": str(v)})
    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = _cubic_lhs(Qs, a, b, c)
        rhs = CycMatrix.scalar(size, rho[a, b, c] * 3)
        if lhs != rhs:
            return CheckResult("cubic_clifford", False,
                               witness={"abc": [a + 1, b + 1, c + 1], "lhs": lhs.to_nested(), "rhs": rhs.to_nested()})
    return CheckResult("cubic_clifford", True)


def s3_symmetrizer(a: CycMatrix, b: CycMatrix, c: CycMatrix) -> CycMatrix:
    """(abc + bca + cab + acb + cba + bac) / 6."""
    _check_square((a, b, c))
    total = a @ b @ c + b @ c @ a + c @ a @ b + a @ c @ b + c @ b @ a + b @ a @ c
    return total * Fraction(1, 6)


# ---------------------------------------------------------------------------
# polynomial Clifford algebra


@dataclass(frozen=True)
class PolyCliffordRep:
    gammas: tuple  # Gamma^0 .. Gamma^3, upper indices
    gtilde: CycMatrix
    eta: tuple = (1, -1, -1, -1)  # diagonal of eta^{mu nu}

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(self.gammas))
        object.__setattr__(self, "eta", tuple(Fraction(x) for x in self.eta))
        if len(self.eta) != len(self.gammas):
            raise ValueError("one metric entry per Gamma matrix")
        if any(x == 0 for x in self.eta):
            raise ValueError("the metric must be nondegenerate")
        _check_square(self.gammas + (self.gtilde,))

    @property
    def size(self) -> int:
        return self.gtilde.rows

    @property
    def n(self) -> int:
        return len(self.gammas)

    def one(self) -> CycMatrix:
        return CycMatrix.identity(self.size)

    def lower(self, mu: int) -> CycMatrix:
        """Gamma_mu = eta_{mu mu} Gamma^mu."""
        return self.gammas[mu] * (1 / self.eta[mu])

    def eta_lower(self, mu: int, nu: int) -> Fraction:
        return 1 / self.eta[mu] if mu == nu else Fraction(0)

    def to_json_obj(self) -> dict:
        return {"gammas": [g.to_nested() for g in self.gammas], "gtilde": self.gtilde.to_nested(),
                "eta": [str(x) for x in self.eta]}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> PolyCliffordRep:
        try:
            gammas = [CycMatrix.from_nested(g) for g in obj["gammas"]]
            gtilde = CycMatrix.from_nested(obj["gtilde"])
            eta = [Fraction(str(x)) for x in obj.get("eta", (1, -1, -1, -1))]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed representation: {exc}") from exc
        return cls(tuple(gammas), gtilde, tuple(eta))


def omega_rescaled(rep: PolyCliffordRep) -> PolyCliffordRep:
    """(Gamma^mu, Gamma~) -> (w Gamma^mu, w Gamma~)."""
    return PolyCliffordRep(tuple(g * W for g in rep.gammas), rep.gtilde * W, rep.eta)


def pt_reflected(rep: PolyCliffordRep) -> PolyCliffordRep:
    """Gamma^mu -> -Gamma^mu."""
    return PolyCliffordRep(tuple(-g for g in rep.gammas), rep.gtilde, rep.eta)


def poly_clifford_check(rep: PolyCliffordRep) -> list[CheckResult]:
    """The four symmetrized cubic conditions, every index combination."""
    G, T, one = rep.gammas, rep.gtilde, rep.one()
    out = []
    cube = s3_symmetrizer(T, T, T)
    out.append(CheckResult("gtilde_cube", cube == T @ T @ T and cube == -one))

    def sweep(name, arity, lhs, rhs):
        for idx in itertools.product(range(rep.n), repeat=arity):
            if lhs(*idx) != rhs(*idx):
                return CheckResult(name, False, witness=list(idx))
        return CheckResult(name, True)

    zero = CycMatrix.zeros(rep.size)
    out.append(sweep("gamma_gtilde_gtilde", 1, lambda m: s3_symmetrizer(G[m], T, T), lambda m: zero))
    out.append(sweep("gamma_gamma_gtilde", 2, lambda m, v: s3_symmetrizer(G[m], G[v], T),
                     lambda m, v: one * (rep.eta[m] / 3 if m == v else 0)))
    out.append(sweep("gamma_gamma_gamma", 3, lambda m, r, l: s3_symmetrizer(G[m], G[r], G[l]),
                     lambda *_: zero))
    return out


def w_vectors(rep: PolyCliffordRep) -> dict:
    """W = Gt^2 G, W~ = G Gt^2, W^ = Gt G Gt (upper index), with the verdict on W + W~ + W^ = 0.

    The sum is exactly 3 S3(Gamma^mu, Gt, Gt), so it vanishes precisely
    when the second polynomial Clifford condition holds.
    """
    T = rep.gtilde
    T2 = T @ T
    W_ = [T2 @ g for g in rep.gammas]
    Wt = [g @ T2 for g in rep.gammas]
    Wh = [T @ g @ T for g in rep.gammas]
    sums = [a + b + c for a, b, c in zip(W_, Wt, Wh)]
    bad = next((mu for mu, s in enumerate(sums) if not s.is_zero()), None)
    return {"W": W_, "Wtilde": Wt, "What": Wh, "sum": sums, "sum_vanishes": bad is None, "first_nonzero": bad}


def lorentz_generators(rep: PolyCliffordRep, kind: str = "J1", form: str = "gamma") -> dict:
    """J_{mu lambda} with lower indices, built from the W-vector or the Gamma display.

    J1:  W^_mu W_l + W~_mu W^_l + W~_mu W_l   |   Gt G_mu G_l + G_mu Gt G_l + G_mu G_l Gt
    J2:  W_mu W_l + W~_mu W~_l + W~_mu W_l    |   Gt^2 G_mu Gt^2 G_l + G_mu Gt^2 G_l Gt^2 + Gt^2 G_mu G_l Gt^2
    """
    if kind not in ("J1", "J2") or form not in ("w", "gamma"):
        raise ValueError("kind is J1 or J2, form is 'w' or 'gamma'")
    T = rep.gtilde
    T2 = T @ T
    G = [rep.lower(m) for m in range(rep.n)]
    Wl = [T2 @ g for g in G]
    Wtl = [g @ T2 for g in G]
    Whl = [T @ g @ T for g in G]
    out = {}
    for m, l in itertools.product(range(rep.n), repeat=2):
        if kind == "J1" and form == "w":
            J = Whl[m] @ Wl[l] + Wtl[m] @ Whl[l] + Wtl[m] @ Wl[l]
        elif kind == "J1":
            J = T @ G[m] @ G[l] + G[m] @ T @ G[l] + G[m] @ G[l] @ T
        elif form == "w":
            J = Wl[m] @ Wl[l] + Wtl[m] @ Wtl[l] + Wtl[m] @ Wl[l]
        else:
            J = T2 @ G[m] @ T2 @ G[l] + G[m] @ T2 @ G[l] @ T2 + T2 @ G[m] @ G[l] @ T2
        out[(m, l)] = J
    return out


def _relation(a: dict, b: dict) -> str:
    if all(a[k] == b[k] for k in a):
        return "equal"
    if all(a[k] == -b[k] for k in a):
        return "negated"
    return "differ"


def lorentz_forms_check(rep: PolyCliffordRep) -> dict:
    """How the W-built and Gamma-built versions of J1 and J2 compare: equal, negated or differ.

    Also records the symmetric parts J_{mu l} + J_{l mu} of the Gamma-built J1.
    """
    out = {}
    for kind in ("J1", "J2"):
        out[kind] = _relation(lorentz_generators(rep, kind, "w"), lorentz_generators(rep, kind, "gamma"))
    J = lorentz_generators(rep, "J1", "gamma")
    out["J1_symmetric_part_zero"] = all((J[(m, l)] + J[(l, m)]).is_zero() for m, l in J)
    return out


def _commutator(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    return a @ b - b @ a


def lorentz_commutator_check(rep: PolyCliffordRep, form: str = "gamma") -> CheckResult:
    """The extra condition [G_m G_r G_l + G_m G_l G_r + G_l G_m G_r, Gt] = 0, then the Lorentz brackets.

    M_{mu nu} = (i/2) A_{mu nu} with A the antisymmetric part of J1.  The
    factor i/2 makes M hermitian-type, so the target is
    [M_mn, M_rs] = i (eta_nr M_ms - eta_mr M_ns - eta_ns M_mr + eta_ms M_nr).
    ``details["scale"]`` is the single k with [M, M] = k (bracket of the
    parenthesis) when one exists; the check passes iff k = i.
    """
    G = [rep.lower(m) for m in range(rep.n)]
    T = rep.gtilde
    for m, r, l in itertools.product(range(rep.n), repeat=3):
        X = G[m] @ G[r] @ G[l] + G[m] @ G[l] @ G[r] + G[l] @ G[m] @ G[r]
        if not _commutator(X, T).is_zero():
            return CheckResult("lorentz_commutators", False,
                               witness={"extra_condition": [m, r, l]}, details={"skipped": "Lorentz brackets"})
    J = lorentz_generators(rep, "J1", form)
    quarter_i = I_UNIT * Fraction(1, 4)
    M = {k: (J[k] - J[(k[1], k[0])]) * quarter_i for k in J}
    eta = rep.eta_lower
    scale = None
    consistent = True
    witness = None
    for m, n, r, s in itertools.product(range(rep.n), repeat=4):
        lhs = _commutator(M[(m, n)], M[(r, s)])
        rhs = (M[(m, s)] * eta(n, r) - M[(n, s)] * eta(m, r)
               - M[(m, r)] * eta(n, s) + M[(n, r)] * eta(m, s))
        if lhs != rhs * I_UNIT and witness is None:
            witness = [m, n, r, s]
        if rhs.is_zero():
            consistent = consistent and lhs.is_zero()
            continue
        k_idx = next(i for i, x in enumerate(rhs.entries) if x)
        k = lhs.entries[k_idx] / rhs.entries[k_idx]
        if rhs * k != lhs or (scale is not None and k != scale):
            consistent = False
        scale = k if scale is None else scale
    details = {"convention": "[M_mn, M_rs] = i (eta_nr M_ms - eta_mr M_ns - eta_ns M_mr + eta_ms M_nr)",
               "generator": "M = (i/2) * antisymmetric part of J1", "form": form}
    if consistent and scale is not None:
        details["scale"] = str(scale)
    return CheckResult("lorentz_commutators", witness is None, witness=witness, details=details)


# ---------------------------------------------------------------------------
# D(pi)^3 as a matrix polynomial


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ea, A in p.items():
        for eb, B in q.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            prod = A @ B
            out[e] = out[e] + prod if e in out else prod
    return {e: M for e, M in out.items() if not M.is_zero()}


def dirac_cube_check(rep: PolyCliffordRep, m) -> CheckResult:
    """D(pi) = i Gamma^mu pi_mu + m Gt cubed against -m (eta^{mu nu} pi_mu pi_nu + m^2) 1.

    The pi_mu are commuting formal variables; the comparison is coefficient
    by coefficient, and ``details`` reports each total degree separately.
    """
    m = Fraction(m)
    n = rep.n
    zero_exp = (0,) * n
    D = {zero_exp: rep.gtilde * m}
    for mu in range(n):
        e = tuple(int(k == mu) for k in range(n))
        D[e] = rep.gammas[mu] * I_UNIT
    cube = _poly_mul(_poly_mul(D, D), D)
    one = rep.one()
    target = {zero_exp: one * (-m ** 3)}
    for mu in range(n):
        e = tuple(2 * int(k == mu) for k in range(n))
        target[e] = one * (-m * rep.eta[mu])
    target = {e: M for e, M in target.items() if not M.is_zero()}
    sectors = {str(k): True for k in range(4)}
    witness = None
    for e in sorted(set(cube) | set(target)):
        lhs = cube.get(e, CycMatrix.zeros(rep.size))
        rhs = target.get(e, CycMatrix.zeros(rep.size))
        if lhs != rhs:
            sectors[str(sum(e))] = False
            if witness is None:
                witness = {"exponents": list(e)}
    return CheckResult("dirac_cube", witness is None, witness=witness,
                       details={"m": str(m), "sectors": sectors})


# ---------------------------------------------------------------------------
# concrete matrices


def dirac_gammas() -> tuple[tuple, CycMatrix]:
    """Dirac-basis gamma^0..gamma^3 with {g^mu, g^nu} = 2 eta^{mu nu}, and gamma5 = i g0 g1 g2 g3."""
    from .cubic_matrix import pauli_matrices

    sig = pauli_matrices()
    I2, Z2 = CycMatrix.identity(2), CycMatrix.zeros(2)

    def blocks(a, b, c, d):
        return CycMatrix.from_function(4, 4, lambda i, j: (a, b, c, d)[2 * (i // 2) + j // 2][i % 2, j % 2])

    g0 = blocks(I2, Z2, Z2, -I2)
    gs = [blocks(Z2, s, -s, Z2) for s in sig]
    g5 = (g0 @ gs[0] @ gs[1] @ gs[2]) * I_UNIT
    return (g0, *gs), g5


def block_rep() -> PolyCliffordRep:
    """A 12-dimensional solution of the four conditions built from Dirac matrices.

    Gt = [[0, -1, 0], [0, 0, g5], [g5, 0, 0]],
    Gamma^mu = -i [[0, 0, 0], [0, 0, g^mu], [g^mu, 0, 0]].
    """
    gammas, g5 = dirac_gammas()
    one, zero = CycMatrix.identity(4), CycMatrix.zeros(4)

    def grid(cells):
        return CycMatrix.from_function(12, 12, lambda i, j: cells[i // 4][j // 4][i % 4, j % 4])

    gtilde = grid([[zero, -one, zero], [zero, zero, g5], [g5, zero, zero]])
    gam = tuple(grid([[zero, zero, zero], [zero, zero, g], [g, zero, zero]]) * (-I_UNIT) for g in gammas)
    return PolyCliffordRep(gam, gtilde)


def nonion_gtilde() -> CycMatrix:
    """-eta1, whose cube is -1."""
    return -nonion_generators()[0]
