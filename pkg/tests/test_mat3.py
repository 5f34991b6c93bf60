from fractions import Fraction as F

import pytest
from conftest import cyclos, rationals
from hypothesis import given
from hypothesis import strategies as st

from fig8char.mat3 import (
    Mat2,
    Mat3,
    Matrix,
    diag,
    identity,
    nullspace,
    solve_intertwiner,
)
from fig8char.numtower import Cyclo12

# Frozen sympy values.
M = Mat3([[2, -1, 3], [F(1, 2), 4, 0], [-3, 5, 7]])


def test_det_adj_charpoly_oracle():
    assert M.det() == 103
    assert M.adj() == Mat3([[28, 22, -12], [F(-7, 2), 23, F(3, 2)], [F(29, 2), -7, F(17, 2)]])
    assert M.charpoly() == [-103, F(119, 2), -13, 1]


def test_cayley_hamilton_and_inverse():
    assert M.eval_poly(M.charpoly()) == Matrix([[0] * 3] * 3)
    assert (M @ M.inv()).is_identity()
    with pytest.raises(ZeroDivisionError):
        Mat3([[1, 2, 3], [2, 4, 6], [0, 0, 1]]).inv()


def test_shape_checks():
    with pytest.raises(ValueError):
        Mat2([[1, 2, 3], [1, 2, 3], [1, 2, 3]])
    with pytest.raises(ValueError):
        Mat3([[1, 0], [0, 1]])


mat3s = st.lists(st.lists(cyclos, min_size=3, max_size=3), min_size=3, max_size=3).map(Mat3)
mat2s = st.lists(st.lists(rationals, min_size=2, max_size=2), min_size=2, max_size=2).map(Mat2)


@given(mat3s, mat3s)
def test_det_multiplicative(A, B):
    assert (A @ B).det() == A.det() * B.det()


@given(mat3s)
def test_adjugate_identity(A):
    assert A @ A.adj() == identity(3, Cyclo12(1)) * A.det()


@given(mat2s, mat2s)
def test_sym2_is_a_homomorphism(A, B):
    if A.det() != 1 or B.det() != 1:
        A = Mat2([[1, A[0, 1]], [0, 1]])
        B = Mat2([[1, 0], [B[1, 0], 1]])
    assert (A @ B).sym2() == A.sym2() @ B.sym2()
    assert A.sym2().trace() == A.trace() ** 2 - 1


def test_sym2_requires_det_one():
    with pytest.raises(ValueError):
        Mat2([[2, 0], [0, 1]]).sym2()


def test_nullspace_and_intertwiner():
    basis = nullspace([[1, 2, 3], [2, 4, 6]], 3)
    assert len(basis) == 2
    for v in basis:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    # trivial monodromy pair: every matrix intertwines
    one = identity()
    assert len(solve_intertwiner(one, one)) == 9
    A, B = diag(2, 3, F(1, 6)), diag(5, F(1, 5), 1)
    for T in solve_intertwiner(A, B):
        assert T @ A == A @ B @ T and T @ B == B @ A @ B @ T


def test_power_and_scalar():
    R = Mat3([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert (R ** 3).is_identity() and not (R ** 2).is_identity()
    assert (R ** -1) == R ** 2
    assert diag(5, 5, 5).is_scalar()
