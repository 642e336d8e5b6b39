import itertools
import random
from fractions import Fraction

import pytest

from ternalg.cyclotomic import CycMatrix, Cyclotomic
from ternalg.triple_systems import (
    MissingParameter,
    RFamily,
    RMatrix,
    TripleSystem,
    apply_operator_ternary,
    axioms_check,
    flip,
    hilbert_system,
    hilbert_ternary,
    orthogonal_model,
    quantum_sl2_r,
    r_from_triple,
    random_r,
    spectral_check_all,
    symmetry_check,
    ternary_yb_check,
    triple_from_r,
    yb_check_braid,
    yb_check_constant,
    yb_check_spectral,
    yb_test_set,
    zero_system,
)


def symmetric_perturbed(n=2):
    return RMatrix.from_function(
        n, lambda a, b, c, d: int((a, b) == (c, d)) + int((a, b, c, d) in ((0, 0, 0, 1), (0, 0, 1, 0))))


def perturbed(n=2):
    # identity plus the single entry R^{11}_{12}
    return RMatrix.from_function(n, lambda a, b, c, d: int((a, b) == (c, d)) + int((a, b, c, d) == (0, 0, 0, 1)))


# --- an independent index-loop oracle for the constant equation -------------

def constant_oracle(R):
    n = R.dim
    idx = list(itertools.product(range(n), repeat=3))

    def r12(u, v):
        return R.entry(u[0], u[1], v[0], v[1]) if u[2] == v[2] else 0

    def r13(u, v):
        return R.entry(u[0], u[2], v[0], v[2]) if u[1] == v[1] else 0

    def r23(u, v):
        return R.entry(u[1], u[2], v[1], v[2]) if u[0] == v[0] else 0

    def prod(f, g, h, u, v):
        return sum((f(u, p) * g(p, q) * h(q, v) for p in idx for q in idx), Cyclotomic(0))

    return all(prod(r12, r13, r23, u, v) == prod(r23, r13, r12, u, v) for u in idx for v in idx)


# --- triple systems ----------------------------------------------------------

def test_zero_system_passes_all_axioms():
    assert all(r.passed for r in axioms_check(zero_system(2)))
    symplectic = TripleSystem(2, -1, 0, CycMatrix.from_rows([[0, 1], [-1, 0]]))
    assert all(r.passed for r in axioms_check(symplectic))
    # the identity form is not antisymmetric
    assert not axioms_check(zero_system(2, epsilon=-1))[0].passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orthogonal_model_axioms(n):
    res = {r.name: r.passed for r in axioms_check(orthogonal_model(n))}
    assert res == {"axiom_a": True, "axiom_b": True, "axiom_c": True, "axiom_d": True, "axiom_e": True}


def test_flipped_sign_breaks_axiom_b():
    ts = orthogonal_model(2)
    C = dict(ts.C)
    C[(0, 0, 1, 1)] = -C[(0, 0, 1, 1)]
    bad = TripleSystem(2, 1, 1, ts.g, C)
    res = {r.name: r for r in axioms_check(bad)}
    assert not res["axiom_b"].passed
    # {e2,e1,e2} = -{e1,e2,e2} is the first basis triple touching the flipped constant
    assert res["axiom_b"].witness == [1, 2, 2]


def test_orthogonal_model_product_formula():
    ts = orthogonal_model(3, lambda0=Fraction(1, 2))
    rng = random.Random(0)
    for _ in range(10):
        x, y, z = ([Cyclotomic(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3))
        dot = lambda a, b: sum((p * q for p, q in zip(a, b)), Cyclotomic(0))  # noqa: E731
        expect = [Fraction(1, 2) * (dot(y, z) * xi - dot(z, x) * yi) for xi, yi in zip(x, y)]
        assert ts.product(x, y, z) == expect


def test_system_validation():
    with pytest.raises(ValueError):
        TripleSystem(2, 0, 0, CycMatrix.identity(2))
    with pytest.raises(ValueError):
        TripleSystem(2, 1, 0, CycMatrix.identity(3))
    with pytest.raises(ValueError):
        TripleSystem(1, 1, 0, CycMatrix.identity(1), {(0, 0, 0, 1): 1})
    with pytest.raises(ValueError):
        _ = TripleSystem(2, 1, 0, CycMatrix.zeros(2)).ginv
    with pytest.raises(ValueError):
        orthogonal_model(2, g=CycMatrix.from_rows([[1, 1], [0, 1]]))


def test_triple_system_json_roundtrip():
    ts = orthogonal_model(2, lambda0=Fraction(3, 2))
    back = TripleSystem.from_json_obj(ts.to_json_obj())
    assert back.C == ts.C and back.g == ts.g and back.lambda0 == ts.lambda0
    with pytest.raises(ValueError):
        TripleSystem.from_json_obj({"dim": 2})


# --- R from triple products -----------------------------------------------

def test_r_from_zero_system():
    assert r_from_triple(zero_system(2)).matrix == CycMatrix.zeros(4)


def test_r_from_delta_structure():
    n = 2
    C = {(j, j, k, k): 1 for j in range(n) for k in range(n)}  # C^j_ikm = delta^j_i g_km
    R = r_from_triple(TripleSystem(n, 1, 0, CycMatrix.identity(n), C))
    for a, b, c, d in itertools.product(range(n), repeat=4):
        assert R.entry(a, b, c, d) == int(a == b and c == d)


def test_r_from_orthogonal_model_n2():
    R = r_from_triple(orthogonal_model(2))
    assert R.matrix == CycMatrix.from_rows([[0, 0, 0, 1], [0, -1, 0, 0], [0, 0, -1, 0], [1, 0, 0, 0]])


def test_r_with_nontrivial_form():
    g = CycMatrix.from_rows([[2, 0], [0, 3]])
    ts = orthogonal_model(2, g=g)
    R = r_from_triple(ts)
    gi = g.inverse()
    # literal contraction: R^ij_km = g_ab g^ia g^jc C^b_ckm
    for i, j, k, m in itertools.product(range(2), repeat=4):
        s = Cyclotomic(0)
        for a, b, c in itertools.product(range(2), repeat=3):
            s = s + g[a, b] * gi[i, a] * gi[j, c] * ts.C.get((b, c, k, m), 0)
        assert R.entry(i, j, k, m) == s


def test_r_is_linear_in_c():
    ts = orthogonal_model(2)
    lam = Fraction(-5, 3)
    assert r_from_triple(ts.scaled(lam)).matrix == r_from_triple(ts).matrix * lam


def test_triple_from_r_inverts_r_from_triple():
    rng = random.Random(1)
    for _ in range(5):
        R = random_r(rng, 2)
        assert r_from_triple(triple_from_r(R)) == R
    g = CycMatrix.from_rows([[1, 1], [1, 2]])
    R = random_r(rng, 2)
    assert r_from_triple(triple_from_r(R, g=g)) == R


# --- Yang-Baxter: constant and braid ----------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_and_flip(n):
    for R in (RMatrix.identity(n), flip(n)):
        assert yb_check_constant(R)
        assert yb_check_braid(R)
        assert symmetry_check(R)


def test_perturbed_matrix_fails():
    E = perturbed()
    assert not yb_check_constant(E)
    assert not yb_check_braid(flip(2) @ E)
    assert not symmetry_check(RMatrix.from_function(2, lambda a, b, c, d: int((a, b, c, d) == (0, 0, 0, 1))))


def test_quantum_r_solves_constant_form():
    for q in (Fraction(2), Fraction(-1, 3), Fraction(1)):
        R = quantum_sl2_r(q)
        assert yb_check_constant(R)
        assert constant_oracle(R)
    with pytest.raises(ValueError):
        quantum_sl2_r(0)


def test_braid_constant_equivalence_on_test_set():
    mats = yb_test_set(seed=0, count=20, n=2)
    assert len(mats) == 20
    P = flip(2)
    solved = 0
    for R in mats:
        c = yb_check_constant(R)
        assert c == constant_oracle(R)
        assert yb_check_braid(P @ R) == c
        solved += c
    assert 0 < solved < 20


def test_orthogonal_model_yang_baxter_status():
    R2 = r_from_triple(orthogonal_model(2))
    assert symmetry_check(R2)
    assert yb_check_braid(R2)
    assert not yb_check_constant(R2)
    R3 = r_from_triple(orthogonal_model(3))
    assert not yb_check_braid(R3) and not yb_check_constant(R3)


# --- spectral form ------------------------------------------------------------

THETAS = [Fraction(k, 2) for k in range(-4, 5)]


def test_constant_families_match_braid_form():
    for R in (RMatrix.identity(2), flip(2), quantum_sl2_r(2), r_from_triple(orthogonal_model(2))):
        fam = RFamily.constant(R, [0, 1, 2])
        res = spectral_check_all(fam)
        assert len(res) == 6
        assert all(r.passed == yb_check_braid(R) for r in res)


def test_rational_family_passes_everywhere():
    P = flip(2)
    fam = RFamily({t: RMatrix.identity(2) + P * t for t in THETAS})
    res = spectral_check_all(fam)
    assert len(res) == 61
    assert all(r.passed for r in res)


def test_family_failing_at_some_triples_reports_parameters():
    fam = RFamily({0: RMatrix.identity(2), 1: RMatrix.identity(2), 2: perturbed()})
    res = spectral_check_all(fam)
    bad = [r for r in res if not r.passed]
    good = [r for r in res if r.passed]
    assert bad and good
    w = bad[0].witness
    assert {"theta", "theta'", "theta''", "upper", "lower", "lhs", "rhs"} <= set(w)
    assert Fraction(w["theta"]) + Fraction(w["theta''"]) == Fraction(w["theta'"])


def test_missing_parameter():
    fam = RFamily({0: RMatrix.identity(2)})
    with pytest.raises(MissingParameter):
        yb_check_spectral(fam, 0, 1)
    with pytest.raises(MissingParameter):
        fam.at(Fraction(1, 3))


def test_family_json_roundtrip():
    fam = RFamily({Fraction(1, 2): flip(2), 0: RMatrix.identity(2)})
    assert RFamily.from_json_obj(fam.to_json_obj()) == fam
    assert RMatrix.from_json_obj(flip(2).to_json_obj()) == flip(2)
    with pytest.raises(ValueError):
        RMatrix.from_json_obj({"dim": 2, "R": [[1]]})


# --- ternary form -------------------------------------------------------------

def _ternary_family(fam):
    return {t: triple_from_r(R) for t, R in fam.items()}


@pytest.mark.parametrize("family", ["rational", "shifted", "perturbed"])
def test_ternary_and_spectral_verdicts_agree(family):
    ts = [0, Fraction(1, 2), 1]
    P = flip(2)
    if family == "rational":
        fam = RFamily({t: RMatrix.identity(2) + P * t for t in ts})
    elif family == "shifted":
        fam = RFamily({t: RMatrix.identity(2) * t + P for t in ts})
    else:
        fam = RFamily({0: RMatrix.identity(2), Fraction(1, 2): RMatrix.identity(2), 1: symmetric_perturbed()})
    assert all(symmetry_check(R) for R in fam.values())
    tfam = _ternary_family(fam)
    verdicts = []
    for a, b in itertools.product(ts, repeat=2):
        if a + b in fam:
            v = yb_check_spectral(fam, a, b).passed
            assert ternary_yb_check(tfam, a, b).passed == v
            verdicts.append(v)
    if family == "perturbed":
        assert verdicts.count(False) == 1


def test_agreement_needs_the_symmetry_condition():
    # without R^ba_dc = R^ab_cd the two forms can disagree
    fam = RFamily({0: RMatrix.identity(2), 1: perturbed()})
    tfam = _ternary_family(fam)
    assert yb_check_spectral(fam, 0, 1).passed
    assert not ternary_yb_check(tfam, 0, 1).passed


def test_ternary_zero_family_and_orthogonal_model():
    z = zero_system(2)
    assert ternary_yb_check({0: z}, 0, 0).passed
    for n in (2, 3):
        ts = orthogonal_model(n)
        fam = RFamily.constant(r_from_triple(ts), [0])
        assert ternary_yb_check({0: ts}, 0, 0).passed == yb_check_spectral(fam, 0, 0).passed


def test_ternary_scalar_case():
    # N = 1: both sides are c(theta) c(theta') c(theta'') e
    fam = {t: TripleSystem(1, 1, 0, CycMatrix.identity(1), {(0, 0, 0, 0): c})
           for t, c in ((0, 2), (1, 3), (2, 5))}
    for a, b in ((0, 0), (0, 1), (1, 1), (1, 0), (0, 2), (2, 0)):
        assert ternary_yb_check(fam, a, b).passed
    with pytest.raises(MissingParameter):
        ternary_yb_check(fam, 2, 2)


def test_ternary_requires_shared_form():
    fam = {0: orthogonal_model(2), 1: orthogonal_model(2, g=CycMatrix.from_rows([[2, 0], [0, 1]]))}
    with pytest.raises(ValueError):
        ternary_yb_check(fam, 0, 1)


# --- Hilbert-space product ----------------------------------------------------

def test_hilbert_examples():
    assert hilbert_ternary(1, 2, 2, 3) == [1, 0, 0]
    assert hilbert_ternary(1, 2, 3, 3) == [0, 0, 0]
    with pytest.raises(ValueError):
        hilbert_ternary(1, 2, 4, 3)


def test_hilbert_idempotent_reapplication():
    n = 3
    ts = hilbert_system(n)
    for i, j, k, l in itertools.product(range(n), repeat=4):
        first = ts.basis_product(i, j, k)
        again = ts.product(first, ts.unit(l), ts.unit(l))
        assert again == first
        assert first == hilbert_ternary(i + 1, j + 1, k + 1, n)


def test_operator_through_ternary_product():
    rng = random.Random(3)
    A = CycMatrix.from_function(3, 3, lambda i, j: rng.randint(-4, 4))
    c = [Cyclotomic(rng.randint(-4, 4)) for _ in range(3)]
    expect = [sum((A[k, m] * c[m] for m in range(3)), Cyclotomic(0)) for k in range(3)]
    assert apply_operator_ternary(A, c) == expect
