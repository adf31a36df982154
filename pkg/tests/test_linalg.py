from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from alcoves.errors import DegenerateBasisError, SingularSystemError
from alcoves.linalg import (QMatrix, QVector, gram_det, gram_matrix,
                            nullspace_basis, rational_from_str, rational_to_str,
                            solve_linear)

rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)


def test_gram_det_single_coroot():
    # type A simple coroot has squared norm 2
    assert gram_det([QVector([1, -1, 0])]) == 2


def test_gram_det_a2_pair():
    # Gram matrix [[2,-1],[-1,2]] worked by hand: det = 3
    a1 = QVector([1, -1, 0])
    a2 = QVector([0, 1, -1])
    assert gram_matrix([a1, a2]) == QMatrix([[2, -1], [-1, 2]])
    assert gram_det([a1, a2]) == 3


def test_gram_det_empty_is_one():
    assert gram_det([]) == 1


def test_gram_det_rejects_dependent():
    with pytest.raises(DegenerateBasisError):
        gram_det([QVector([1, 1]), QVector([2, 2])])


def test_solve_identity():
    m = QMatrix.identity(3)
    b = QVector([5, Fraction(-7, 3), 0])
    assert solve_linear(m, b) == b


def test_solve_cartan_system():
    m = QMatrix([[2, -1], [-1, 2]])
    x = solve_linear(m, QVector([1, 0]))
    assert x == QVector([Fraction(2, 3), Fraction(1, 3)])
    assert m.matvec(x) == QVector([1, 0])  # verified by substitution


def test_solve_singular_raises():
    with pytest.raises(SingularSystemError):
        solve_linear(QMatrix([[1, 1], [1, 1]]), QVector([1, 0]))


def test_matrix_inverse_and_rank():
    m = QMatrix([[2, -1], [-1, 2]])
    inv = m.inverse()
    assert m.matmul(inv) == QMatrix.identity(2)
    assert m.rank() == 2
    assert QMatrix([[1, 2], [2, 4]]).rank() == 1


def test_nullspace_of_simple_roots_is_ones():
    m = QMatrix([[1, -1, 0], [0, 1, -1]])
    basis = nullspace_basis(m)
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == v[1] == v[2] != 0


@given(rationals, rationals)
def test_rational_arithmetic_exact(a, b):
    assert (a + b) - b == a


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_gram_det_nonnegative(u, v):
    m = gram_matrix([QVector(u), QVector(v)])
    assert m.det() >= 0  # zero exactly when dependent


def test_rational_string_roundtrip():
    for q in [Fraction(3), Fraction(-2, 7), Fraction(0)]:
        assert rational_from_str(rational_to_str(q)) == q
