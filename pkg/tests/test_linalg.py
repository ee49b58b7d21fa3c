import random
from fractions import Fraction

import pytest

from dihedralcovers.fields import QQ, GF
from dihedralcovers.poly import Poly
from dihedralcovers.homog import HForm
from dihedralcovers import linalg
from dihedralcovers.graded import GradedMatrix, kernel_basis
from dihedralcovers.parsing import parse_form


def test_rank_rref_nullspace():
    m = [[QQ.of(1), QQ.of(2), QQ.of(3)],
         [QQ.of(2), QQ.of(4), QQ.of(6)],
         [QQ.of(1), QQ.of(0), QQ.of(1)]]
    assert linalg.rank(m) == 2
    ns = linalg.nullspace(m, QQ)
    assert len(ns) == 1
    v = ns[0]
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve():
    m = [[QQ.of(2), QQ.of(1)], [QQ.of(1), QQ.of(3)]]
    rhs = [QQ.of(5), QQ.of(10)]
    x = linalg.solve(m, rhs, QQ)
    assert [sum(a * b for a, b in zip(row, x)) for row in m] == rhs
    assert linalg.solve([[QQ.of(0)]], [QQ.one], QQ) is None


def test_det_vs_bareiss(rng):
    K = GF(101)
    for size in (1, 2, 3, 4, 5):
        m = [[K.random(rng) for _ in range(size)] for _ in range(size)]
        assert linalg.det([row[:] for row in m], K) == linalg.bareiss_det(
            [row[:] for row in m], K.one)


def test_bareiss_over_polynomials():
    x = Poly.x(QQ)
    one = Poly.one(QQ)
    m = [[x, one], [x * x, x]]
    assert linalg.bareiss_rank([row[:] for row in m], one) == 1
    m2 = [[x, one], [one, x]]
    assert linalg.bareiss_det([row[:] for row in m2], one) == x * x - one
    assert linalg.bareiss_rank([row[:] for row in m2], one) == 2


def test_graded_matrix_degrees_enforced():
    f = parse_form("x0^2", QQ, 2)
    with pytest.raises(ValueError):
        GradedMatrix(QQ, [0], [1], [[f]])
    g = GradedMatrix(QQ, [0], [2], [[f]])
    assert g.rank() == 1


def test_graded_compose_and_twist():
    x0 = parse_form("x0", QQ, 2)
    x1 = parse_form("x1", QQ, 2)
    a = GradedMatrix(QQ, [0], [1, 1], [[x0, x1]])
    b = GradedMatrix(QQ, [1, 1], [2], [[x1], [x0]])
    c = a.compose(b)
    assert c.row_twists == [0] and c.col_twists == [2]
    assert c.entries[0][0] == parse_form("2*x0*x1", QQ, 2)
    t = a.twist(3)
    assert t.row_twists == [3] and t.col_twists == [4, 4]


def test_koszul_kernel():
    # kernel of (x0, x1): O(-1)^2 -> O is O(-2), spanned by (x1, -x0)
    x0 = parse_form("x0", QQ, 2)
    x1 = parse_form("x1", QQ, 2)
    m = GradedMatrix(QQ, [0], [1, 1], [[x0, x1]])
    ker = kernel_basis(m)
    assert ker.col_twists == [2]
    col = [ker.entries[0][0], ker.entries[1][0]]
    s = m.entries[0][0] * col[0] + m.entries[0][1] * col[1]
    assert s.is_zero()


def test_transpose_negates_twists():
    x0 = parse_form("x0", QQ, 2)
    m = GradedMatrix(QQ, [0], [1], [[x0]])
    t = m.transpose()
    assert t.row_twists == [-1] and t.col_twists == [0]
    assert t.entries[0][0] == x0
