"""Nambu mechanics on R^3: the ternary bracket, its identities and an Euler-top integrator."""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cyclotomic import CycMatrix
from .poly import Poly, variables
from .report import CheckResult

__all__ = [
    "NambuSystem",
    "EulerTopParams",
    "Trajectory",
    "NonFiniteState",
    "nambu_bracket",
    "vector_field",
    "divergence",
    "property_suite",
    "sl3_invariance_check",
    "random_unimodular",
    "integrate",
    "random_poly3",
]

X, Y, Z = variables(3)
NAMES = ("x", "y", "z")


def _det3(rows) -> Poly:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def nambu_bracket(f: Poly, H: Poly, G: Poly) -> Poly:
    """[f, H, G] = det d(f, H, G) / d(x, y, z), rows in that order."""
    return _det3([f.gradient(), H.gradient(), G.gradient()])


@dataclass(frozen=True)
class NambuSystem:
    H: Poly
    G: Poly

    def __post_init__(self):
        if self.H.nvars != 3 or self.G.nvars != 3:
            raise ValueError("Nambu Hamiltonians are polynomials in x, y, z")


def vector_field(sys: NambuSystem) -> tuple[Poly, Poly, Poly]:
    """grad H x grad G, i.e. the 2x2 Jacobians d(H,G)/d(y,z), d(H,G)/d(z,x), d(H,G)/d(x,y)."""
    hx, hy, hz = sys.H.gradient()
    gx, gy, gz = sys.G.gradient()
    return (hy * gz - hz * gy, hz * gx - hx * gz, hx * gy - hy * gx)


def divergence(field_: Sequence[Poly]) -> Poly:
    return field_[0].diff(0) + field_[1].diff(1) + field_[2].diff(2)


@dataclass(frozen=True)
class EulerTopParams:
    Jx: Fraction
    Jy: Fraction
    Jz: Fraction

    def __post_init__(self):
        for name in ("Jx", "Jy", "Jz"):
            v = Fraction(getattr(self, name))
            if v <= 0:
                raise ValueError(f"{name} must be positive")
            object.__setattr__(self, name, v)

    def system(self) -> NambuSystem:
        """H = |L|^2 / 2 and G = sum L_i^2 / (2 J_i)."""
        half = Fraction(1, 2)
        H = (X * X + Y * Y + Z * Z) * half
        G = X * X * (half / self.Jx) + Y * Y * (half / self.Jy) + Z * Z * (half / self.Jz)
        return NambuSystem(H, G)


# ---------------------------------------------------------------------------
# exact identities


def random_poly3(rng: random.Random, max_degree: int = 3, terms: int = 3, coeff_range: int = 4) -> Poly:
    out = Poly(3)
    while out.is_zero():
        for _ in range(terms):
            deg = rng.randint(0, max_degree)
            exps = [0, 0, 0]
            for _ in range(deg):
                exps[rng.randrange(3)] += 1
            out = out + Poly.monomial(exps, Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3)))
    return out


def property_suite(seed: int = 0, trials: int = 50) -> list[CheckResult]:
    """Antisymmetry/cyclicity (a), Leibniz (b) and a divergence-free flow (c) on random polynomials."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    results = []

    def first_failure(name, test):
        for t in range(trials):
            witness = test()
            if witness is not None:
                return CheckResult(name, False, witness={"trial": t, **witness})
        return CheckResult(name, True, details={"trials": trials})

    def a():
        A, B, C = (random_poly3(rng) for _ in range(3))
        abc = nambu_bracket(A, B, C)
        if not (abc == -nambu_bracket(B, A, C) == nambu_bracket(B, C, A)):
            return {"A": A.to_text(NAMES), "B": B.to_text(NAMES), "C": C.to_text(NAMES)}
        return None

    def b():
        A1, A2, B, C = (random_poly3(rng) for _ in range(4))
        lhs = nambu_bracket(A1 * A2, B, C)
        rhs = nambu_bracket(A1, B, C) * A2 + A1 * nambu_bracket(A2, B, C)
        if lhs != rhs:
            return {"A1": A1.to_text(NAMES), "A2": A2.to_text(NAMES)}
        return None

    def c():
        H, G = random_poly3(rng), random_poly3(rng)
        div = divergence(vector_field(NambuSystem(H, G)))
        if not div.is_zero():
            return {"H": H.to_text(NAMES), "G": G.to_text(NAMES), "div": div.to_text(NAMES)}
        return None

    results.append(first_failure("nambu_antisymmetry", a))
    results.append(first_failure("nambu_leibniz", b))
    results.append(first_failure("nambu_divergence_free", c))
    unit = nambu_bracket(X, Y, Z)
    results.append(CheckResult("nambu_unit", unit == 1, details={"[x,y,z]": unit.to_text(NAMES)}))
    return results


def _as_matrix(M) -> CycMatrix:
    return M if isinstance(M, CycMatrix) else CycMatrix.from_rows(M)


def sl3_invariance_check(M, seed: int = 0, trials: int = 5) -> CheckResult:
    """Brackets are unchanged by a volume-preserving linear change x' = M x."""
    Mm = _as_matrix(M)
    if Mm.shape != (3, 3):
        raise ValueError("M must be 3 x 3")
    if any(not e.is_rational() for e in Mm.entries):
        raise ValueError("M must have rational entries")
    if Mm.det() != 1:
        raise ValueError(f"det M = {Mm.det()}, expected 1")
    rows = [[e.a for e in Mm.row(i)] for i in range(3)]
    primed = tuple(sum((Poly.var(3, j) * rows[i][j] for j in range(3)), Poly(3)) for i in range(3))
    unit = nambu_bracket(*primed)
    if unit != 1:
        return CheckResult("sl3_invariance", False, witness="[x',y',z']", details={"value": unit.to_text(NAMES)})
    rng = random.Random(seed)
    for t in range(trials):
        f, H, G = (random_poly3(rng) for _ in range(3))
        # bracket in primed coordinates, then substitute x' = M x
        before = nambu_bracket(f, H, G).compose(primed)
        after = nambu_bracket(f.compose(primed), H.compose(primed), G.compose(primed))
        if before != after:
            return CheckResult("sl3_invariance", False, witness={"trial": t, "f": f.to_text(NAMES)})
    return CheckResult("sl3_invariance", True, details={"trials": trials})


def random_unimodular(rng: random.Random, shears: int = 6, bound: int = 3) -> list[list[int]]:
    """Integer matrix of determinant 1 built as a product of elementary shears."""
    m = [[int(i == j) for j in range(3)] for i in range(3)]
    for _ in range(shears):
        i, j = rng.sample(range(3), 2)
        c = rng.choice([k for k in range(-bound, bound + 1) if k])
        # row_i += c * row_j
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


# ---------------------------------------------------------------------------
# numerical integration


class NonFiniteState(FloatingPointError):
    def __init__(self, step: int, state):
        super().__init__(f"non-finite state {state} at step {step}")
        self.step = step
        self.state = state


def _compile(p: Poly):
    terms = p.float_terms()

    def f(x, y, z):
        s = 0.0
        for c, (a, b, e) in terms:
            s += c * x ** a * y ** b * z ** e
        return s

    return f


@dataclass
class Trajectory:
    h: float
    samples: list = field(default_factory=list)  # (t, x, y, z, H, G)
    exact: list = field(default_factory=list, repr=False)  # exact (H, G) per sample

    def max_drift(self) -> tuple[float, float]:
        """max |H(t) - H(0)| / |H(0)| and the same for G."""
        h0, g0 = self.exact[0]
        dh = max(abs(h - h0) for h, _ in self.exact)
        dg = max(abs(g - g0) for _, g in self.exact)
        return (float(dh / abs(h0)) if h0 else float(dh), float(dg / abs(g0)) if g0 else float(dg))

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            self.write(fh)

    def write(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "x", "y", "z", "H", "G"])
        for row in self.samples:
            w.writerow(["%.17g" % v for v in row])


def integrate(sys: NambuSystem, initial: Sequence[float], h: float, steps: int) -> Trajectory:
    """Classical RK4 with compensated (Kahan) accumulation of the state.

    The vector field is evaluated in double precision from the exact
    polynomials.  H and G are recorded at every sample; they are computed
    exactly from the compensated state so that the conservation diagnostic
    measures the integrator and not the round-off of the diagnostic itself.
    """
    if not h > 0:
        raise ValueError("step size must be positive")
    if steps < 1:
        raise ValueError("need at least one step")
    fx, fy, fz = (_compile(p) for p in vector_field(sys))

    def rhs(s):
        return (fx(*s), fy(*s), fz(*s))

    state = [float(v) for v in initial]
    comp = [0.0, 0.0, 0.0]
    traj = Trajectory(h)

    def record(k):
        exact = [Fraction(s) - Fraction(c) for s, c in zip(state, comp)]
        H, G = sys.H.eval(exact), sys.G.eval(exact)
        traj.exact.append((H, G))
        traj.samples.append((k * h, state[0], state[1], state[2], float(H), float(G)))

    record(0)
    for k in range(1, steps + 1):
        s = state
        try:
            k1 = rhs(s)
            k2 = rhs([a + 0.5 * h * b for a, b in zip(s, k1)])
            k3 = rhs([a + 0.5 * h * b for a, b in zip(s, k2)])
            k4 = rhs([a + h * b for a, b in zip(s, k3)])
        except OverflowError:
            # float ** raises instead of returning inf
            raise NonFiniteState(k, tuple(state)) from None
        for i in range(3):
            inc = h * ((k1[i] + k4[i]) + 2.0 * (k2[i] + k3[i])) / 6.0
            y = inc - comp[i]
            t = state[i] + y
            comp[i] = (t - state[i]) - y
            state[i] = t
        if not all(math.isfinite(v) for v in state):
            raise NonFiniteState(k, tuple(state))
        record(k)
    return traj
