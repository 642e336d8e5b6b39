import itertools
import random
from fractions import Fraction

import pytest

from ternalg.cubic_matrix import CubicMatrix, nonion_generators, pauli_matrices
from ternalg.cyclotomic import CycI, CycMatrix, CycTensor3, Cyclotomic, omega
from ternalg.graded_operators import (
    PATTERNS,
    GradedBlockMatrix,
    GradedState,
    PatternMismatch,
    PolyCliffordRep,
    block_rep,
    component_scalar_product,
    confinement_check,
    cubic_clifford_check,
    dirac_cube_check,
    dirac_gammas,
    expectation,
    graded_product,
    graded_scalar_product,
    lorentz_commutator_check,
    lorentz_forms_check,
    lorentz_generators,
    nonion_gtilde,
    observable_combinations,
    observable_words,
    omega_rescaled,
    poly_clifford_check,
    pt_reflected,
    random_graded_matrix,
    random_state,
    s3_symmetrizer,
    solve_rho,
    w_vectors,
)

W = omega()
I_ = CycI.i()


def rand_matrix(rng, n, bound=2):
    return CycMatrix.from_function(n, n, lambda i, j: Cyclotomic(rng.randint(-bound, bound), rng.randint(-bound, bound)))


def verdicts(rep):
    return [r.passed for r in poly_clifford_check(rep)]


# --- block algebra --------------------------------------------------------------

def test_patterns_are_permutations():
    for spots in PATTERNS.values():
        assert sorted(r for r, _ in spots) == [0, 1, 2]
        assert sorted(c for _, c in spots) == [0, 1, 2]


@pytest.mark.parametrize("da,db", list(itertools.product(range(3), repeat=2)))
def test_degree_arithmetic(da, db):
    rng = random.Random(da * 3 + db)
    a, b = random_graded_matrix(rng, da, 2), random_graded_matrix(rng, db, 2)
    c = graded_product(a, b)
    assert c.degree == (da + db) % 3
    assert c.to_matrix() == a.to_matrix() @ b.to_matrix()


def test_identity_and_pattern_mismatch():
    rng = random.Random(0)
    x = random_graded_matrix(rng, 1, 2)
    assert graded_product(GradedBlockMatrix.identity(2), x).to_matrix() == x.to_matrix()
    with pytest.raises(PatternMismatch):
        GradedBlockMatrix.from_matrix(x.to_matrix(), 0)
    assert GradedBlockMatrix.from_matrix(x.to_matrix(), 1).blocks == x.blocks
    with pytest.raises(ValueError):
        graded_product(x, random_graded_matrix(rng, 1, 3))
    with pytest.raises(ValueError):
        GradedBlockMatrix(3, x.blocks)


def test_scalar_product():
    one = Cyclotomic(1)
    unit = GradedState(((one,), (one,), (one,)))
    assert graded_scalar_product(unit, unit) == 3
    a = GradedState(((1, 0), (1, 0), (1, 0)))
    b = GradedState(((0, 1), (0, 1), (0, 1)))
    assert graded_scalar_product(a, b) == 0
    rng = random.Random(1)
    for _ in range(20):
        d = rng.randint(1, 3)
        phi, psi = random_state(rng, d), random_state(rng, d)
        assert graded_scalar_product(phi, psi) == component_scalar_product(phi, psi)


def _degree0_oracle(state, op):
    alpha, beta, gamma = op.blocks
    p1, p2, p3 = state.components
    # Tr(bra op ket) picks psi1 with alpha, psi2 with beta, psi3 with gamma
    total = Cyclotomic(0)
    for block, v in ((alpha, p1), (beta, p2), (gamma, p3)):
        for i, j in itertools.product(range(len(v)), repeat=2):
            total = total + v[i].conjugate() * block[i, j] * v[j]
    return total


def test_expectation_values():
    rng = random.Random(2)
    for _ in range(30):
        d = rng.randint(1, 3)
        psi = random_state(rng, d)
        assert expectation(psi, random_graded_matrix(rng, 1, d)) == 0
        assert expectation(psi, random_graded_matrix(rng, 2, d)) == 0
        op = random_graded_matrix(rng, 0, d)
        assert expectation(psi, op) == _degree0_oracle(psi, op)
        assert expectation(psi, GradedBlockMatrix.identity(d)) == graded_scalar_product(psi, psi)


def test_confinement_check():
    res = confinement_check(3, 100, 0)
    assert [r.name for r in res] == ["expectation_vanishes_degree1", "expectation_vanishes_degree2", "degree_arithmetic"]
    assert all(r.passed for r in res)


def test_observable_words():
    assert observable_words() == ["Q Qbar", "Qbar Q", "Q Q Q", "Qbar Qbar Qbar"]
    degs = dict(observable_combinations())
    assert degs["Q Q"] == 2 and degs["Q Qbar"] == 0
    rng = random.Random(3)
    Q, Qbar = random_graded_matrix(rng, 1, 2), random_graded_matrix(rng, 2, 2)
    assert observable_combinations(Q, Qbar) == observable_combinations()
    with pytest.raises(ValueError):
        observable_combinations(Qbar, Q)


# --- cubic Clifford -------------------------------------------------------------

def test_cubic_clifford_trivial():
    z = CycMatrix.zeros(2)
    rho0 = CubicMatrix(2, [Cyclotomic(0)] * 8)
    assert cubic_clifford_check([z, z], rho0).passed
    sym = CubicMatrix(1, [Cyclotomic(5)])
    # plus class satisfies the constraint, but zero Q cannot produce 3 rho
    assert not cubic_clifford_check([CycMatrix.zeros(2)], sym).passed


def test_cubic_clifford_single_nonion():
    eta1 = nonion_generators()[0]
    rho = solve_rho([eta1])
    # (1 - w - w^2) eta1^3 = 2
    assert rho == CubicMatrix(1, [Cyclotomic(Fraction(2, 3))])
    assert cubic_clifford_check([eta1], rho).passed


def test_cubic_clifford_pauli():
    s1, s2, _ = pauli_matrices()
    assert solve_rho([s1, s2]) is None
    bad = CubicMatrix(2, [Cyclotomic(0)] * 8)
    assert not cubic_clifford_check([s1, s2], bad).passed


def test_cubic_clifford_constraint_violation():
    rho = CubicMatrix.coerce(CycTensor3.from_sparse(2, {(0, 1, 1): 1}))
    res = cubic_clifford_check([CycMatrix.zeros(1)] * 2, rho)
    assert not res.passed and "constraint" in res.witness


def test_s3_symmetrizer():
    I = CycMatrix.identity(2)
    assert s3_symmetrizer(I, I, I) == I
    rng = random.Random(4)
    a, b, c = (rand_matrix(rng, 2) for _ in range(3))
    base = s3_symmetrizer(a, b, c)
    for p in itertools.permutations((a, b, c)):
        assert s3_symmetrizer(*p) == base
    d = CycMatrix.from_rows([[2, 0], [0, 3]])
    e = CycMatrix.from_rows([[1, 0], [0, W]])
    assert s3_symmetrizer(d, e, d) == d @ e @ d


# --- polynomial Clifford -----------------------------------------------------

def test_dirac_gammas():
    gammas, g5 = dirac_gammas()
    eta = (1, -1, -1, -1)
    I4 = CycMatrix.identity(4)
    for m, n in itertools.product(range(4), repeat=2):
        assert gammas[m] @ gammas[n] + gammas[n] @ gammas[m] == I4 * (2 * eta[m] * (m == n))
    assert g5 @ g5 == I4


def test_block_rep_fixture():
    rep = block_rep()
    assert rep.size == 12
    assert all(verdicts(rep))
    T = rep.gtilde
    assert T @ T @ T == -rep.one()


def test_nonion_gtilde_and_zero_rep():
    T = nonion_gtilde()
    z = CycMatrix.zeros(3)
    rep = PolyCliffordRep((z,) * 4, T)
    res = {r.name: r.passed for r in poly_clifford_check(rep)}
    assert res["gtilde_cube"]
    zero = PolyCliffordRep((z,) * 4, z)
    assert not poly_clifford_check(zero)[0].passed


def test_rescaling_and_reflection_invariance():
    rng = random.Random(5)
    reps = [block_rep(), PolyCliffordRep(tuple(rand_matrix(rng, 3) for _ in range(4)), nonion_gtilde())]
    for rep in reps:
        assert verdicts(omega_rescaled(rep)) == verdicts(rep)
        assert verdicts(pt_reflected(rep)) == verdicts(rep)


def test_w_vectors():
    rep = block_rep()
    w = w_vectors(rep)
    assert w["sum_vanishes"] and w["first_nonzero"] is None
    z = CycMatrix.zeros(3)
    w0 = w_vectors(PolyCliffordRep((z,) * 4, nonion_gtilde()))
    assert all(m.is_zero() for m in w0["W"]) and w0["sum_vanishes"]


def test_w_sum_is_three_times_symmetrizer():
    rng = random.Random(6)
    rep = PolyCliffordRep(tuple(rand_matrix(rng, 3) for _ in range(4)), rand_matrix(rng, 3))
    w = w_vectors(rep)
    assert not w["sum_vanishes"]
    for mu in range(4):
        assert w["sum"][mu] == s3_symmetrizer(rep.gammas[mu], rep.gtilde, rep.gtilde) * 3


def test_lorentz_forms():
    fixture = lorentz_forms_check(block_rep())
    assert fixture["J1"] == "negated" and fixture["J2"] == "equal"
    rng = random.Random(7)
    rep = PolyCliffordRep(tuple(rand_matrix(rng, 3) for _ in range(4)), nonion_gtilde())
    forms = lorentz_forms_check(rep)
    # with Gt^3 = -1 the W display of J1 is minus the Gamma display
    assert forms["J1"] == "negated"
    assert forms["J2"] == "differ"
    z = CycMatrix.zeros(3)
    zero = PolyCliffordRep((z,) * 4, z)
    assert all(J.is_zero() for J in lorentz_generators(zero, "J2", "w").values())
    with pytest.raises(ValueError):
        lorentz_generators(zero, "J3")


def test_lorentz_brackets_on_fixture():
    rep = block_rep()
    res = lorentz_commutator_check(rep)
    assert res.passed and res.details["scale"] == str(I_)
    other = lorentz_commutator_check(rep, form="w")
    assert not other.passed and other.details["scale"] == str(-I_)


def test_lorentz_control_flow():
    z = CycMatrix.zeros(2)
    assert lorentz_commutator_check(PolyCliffordRep((z,) * 4, z)).passed
    rng = random.Random(8)
    rep = PolyCliffordRep(tuple(rand_matrix(rng, 2) for _ in range(4)), rand_matrix(rng, 2))
    res = lorentz_commutator_check(rep)
    assert not res.passed and "extra_condition" in res.witness
    diag = PolyCliffordRep(tuple(CycMatrix.from_rows([[k, 0], [0, -k]]) for k in (1, 2, 3, 4)),
                           -CycMatrix.identity(2))
    res = lorentz_commutator_check(diag)
    assert "skipped" not in res.details


def test_dirac_cube():
    rep = block_rep()
    for m in (1, 2, Fraction(-1, 2)):
        res = dirac_cube_check(rep, m)
        assert res.passed
        assert res.details["sectors"] == {"0": True, "1": True, "2": True, "3": True}


def test_dirac_cube_sectors_for_partial_rep():
    z = CycMatrix.zeros(3)
    rng = random.Random(9)
    rep = PolyCliffordRep(tuple(rand_matrix(rng, 3) for _ in range(4)), nonion_gtilde())
    res = dirac_cube_check(rep, 1)
    assert not res.passed
    assert res.details["sectors"]["0"]  # m^3 Gt^3 = -m^3 only needs the cube of Gt
    only_t = dirac_cube_check(PolyCliffordRep((z,) * 4, nonion_gtilde()), 2)
    assert only_t.details["sectors"]["0"]


def test_rep_json_roundtrip_and_validation():
    rep = block_rep()
    back = PolyCliffordRep.from_json_obj(rep.to_json_obj())
    assert back == rep
    z = CycMatrix.zeros(2)
    with pytest.raises(ValueError):
        PolyCliffordRep((z,) * 4, z, eta=(1, -1, -1))
    with pytest.raises(ValueError):
        PolyCliffordRep((z,) * 4, z, eta=(1, 0, -1, -1))
    with pytest.raises(ValueError):
        PolyCliffordRep.from_json_obj({"gtilde": [[1]]})
