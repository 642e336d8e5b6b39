import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ternalg.cyclotomic import (
    CycI,
    CycMatrix,
    CycTensor3,
    Cyclotomic,
    format_scalar,
    omega,
    parse_scalar,
    rank,
    row_echelon,
)

W = omega()
W_NUM = cmath.exp(2j * cmath.pi / 3)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
cycs = st.builds(Cyclotomic, fractions, fractions)
cycis = st.builds(CycI, cycs, cycs)


def close(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) < tol


def test_omega_is_a_primitive_cube_root():
    assert W ** 3 == 1
    assert W != 1
    assert 1 + W + W * W == 0
    assert W * W == Cyclotomic(-1, -1)
    assert W.conjugate() == W * W
    assert close(W, W_NUM)


@given(cycs, cycs, cycs)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(cycs, cycs)
def test_arithmetic_matches_complex_numbers(a, b):
    assert close(a * b, complex(a) * complex(b), 1e-6)
    assert close(a + b, complex(a) + complex(b))
    assert close(a.conjugate(), complex(a).conjugate())


@given(cycs)
def test_inverse_and_norm(a):
    if a:
        assert a * a.inverse() == 1
        assert a.norm() == a * a.conjugate()
        assert close(a.norm(), abs(complex(a)) ** 2, 1e-6)
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(cycis, cycis)
def test_cyci_arithmetic(a, b):
    assert close(a * b, complex(a) * complex(b), 1e-6)
    if b:
        assert (a / b) * b == a


def test_i_squared():
    i = CycI.i()
    assert i * i == -1
    assert i.conjugate() == -i


@given(cycs)
def test_text_roundtrip(a):
    assert Cyclotomic.parse(str(a)) == a
    assert parse_scalar(format_scalar(a)) == a


@given(cycis)
def test_cyci_text_roundtrip(a):
    assert parse_scalar(str(a)) == a


@pytest.mark.parametrize("text,value", [
    ("w", W), ("-w", -W), ("1/2-w", Fraction(1, 2) - W), ("3", Cyclotomic(3)),
    ("i", CycI.i()), ("-2*i", CycI.i() * -2), ("(1+w)*i", CycI.i() * (1 + W)),
])
def test_parse_literals(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "w w", "1+", "abc", "2w"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        Cyclotomic.parse(bad)


def test_rational_detection_and_equality_with_ints():
    assert Cyclotomic(3).is_rational()
    assert not W.is_rational()
    assert Cyclotomic(2) == 2
    assert CycI(2) == Cyclotomic(2)


def test_matrix_basics():
    A = CycMatrix.from_rows([[1, W], [0, 2]])
    I = CycMatrix.identity(2)
    assert A @ I == A
    assert A @ A.inverse() == I
    assert A.det() == 2
    assert A.trace() == 3
    assert A.T[0, 1] == 0 and A.T[1, 0] == W
    assert A.adjoint()[1, 0] == W * W
    assert (A ** 3) == A @ A @ A
    assert CycMatrix.scalar(2, W).scalar_value() == W
    assert A.scalar_value() is None


def test_matrix_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        CycMatrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_kron_shape_and_entries():
    A = CycMatrix.from_rows([[1, 2], [3, 4]])
    B = CycMatrix.from_rows([[0, 1], [1, 0]])
    K = A.kron(B)
    assert K.shape == (4, 4)
    for i in range(4):
        for j in range(4):
            assert K[i, j] == A[i // 2, j // 2] * B[i % 2, j % 2]


def test_det_matches_complex_oracle():
    rows = [[1, W, 2], [W * W, 0, 1], [3, 1 + W, -1]]
    A = CycMatrix.from_rows(rows)
    c = [[complex(Cyclotomic.coerce(x)) for x in r] for r in rows]
    det = (c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1])
           - c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0])
           + c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]))
    assert close(A.det(), det)


def test_rank():
    assert rank(CycMatrix.from_rows([[1, W], [W, W * W]])) == 1
    assert CycMatrix.identity(3).rank() == 3
    assert CycMatrix.zeros(2).rank() == 0


def test_row_echelon_pivots_follow_key():
    rows = [{0: Cyclotomic(1), 1: Cyclotomic(1)}, {1: Cyclotomic(1), 2: Cyclotomic(1)}]
    default = [p for p, _ in row_echelon(rows)]
    reverse = [p for p, _ in row_echelon(rows, key=lambda c: -c)]
    assert sorted(default) == [0, 1]
    assert sorted(reverse) == [1, 2]


def test_matrix_json_roundtrip():
    A = CycMatrix.from_rows([[1, W], [CycI.i(), Fraction(1, 3)]])
    assert CycMatrix.from_json(A.to_json()) == A
    with pytest.raises(ValueError):
        CycMatrix.from_nested([])


def test_tensor3():
    t = CycTensor3.from_sparse(2, {(0, 1, 1): W})
    assert t[0, 1, 1] == W
    assert t[1, 1, 1] == 0
    assert (t + t)[0, 1, 1] == 2 * W
    assert (t - t).is_zero()
    assert t.nonzero() == {(0, 1, 1): W}
    assert CycTensor3.from_nested(t.to_nested()) == t
