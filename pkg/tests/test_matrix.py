from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicmcm.errors import (
    DimensionMismatchError, InconsistentGradingError, NoSolutionError, NotHomogeneousError,
    NotSquareError,
)
from cubicmcm.fields import GF, QQ
from cubicmcm.matrix import (
    PolyMatrix, adjugate, block, determinant, grading_infer, kron, mat_mul, solve_linear,
)
from cubicmcm.poly import MultiPoly, polys

X = polys(QQ, ("x0", "x1", "x2"))


def const_matrix(rows, field=QQ):
    return PolyMatrix([[MultiPoly.constant(field, 3, v) for v in row] for row in rows])


def small_poly(field):
    exps = st.tuples(*[st.integers(0, 1)] * 3)
    return st.dictionaries(exps, st.integers(-3, 3), max_size=3).map(
        lambda t: MultiPoly(field, 3, t))


def square(field, n):
    return st.lists(st.lists(small_poly(field), min_size=n, max_size=n),
                    min_size=n, max_size=n).map(PolyMatrix)


def test_determinant_constant():
    assert determinant(const_matrix([[1, 2], [3, 4]])) == MultiPoly.constant(QQ, 3, -2)
    assert determinant(const_matrix([[2, 0, 1], [1, 3, 2], [1, 1, 2]])) == MultiPoly.constant(QQ, 3, 6)


def test_determinant_matches_sympy():
    sympy = pytest.importorskip("sympy")
    x0, x1, x2 = X
    m = PolyMatrix([[x0, x1 ** 2, x2], [x1, x0 + x2, x0 * x1], [x2 - x0, x1, x0 ** 2]])
    s = sympy.symbols("x0 x1 x2")
    sm = sympy.Matrix([[s[0], s[1] ** 2, s[2]], [s[1], s[0] + s[2], s[0] * s[1]],
                       [s[2] - s[0], s[1], s[0] ** 2]])
    expected = sympy.Poly(sm.det(), *s).as_dict()
    got = {e: sympy.Rational(c.numerator, c.denominator) for e, c in determinant(m).terms.items()}
    assert got == {e: c for e, c in expected.items() if c != 0}


@pytest.mark.parametrize("fld", [QQ, GF(7)], ids=["QQ", "GF7"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_adjugate_identity(fld, data):
    n = data.draw(st.integers(1, 3))
    m = data.draw(square(fld, n))
    assert m @ adjugate(m) == PolyMatrix.scalar(n, determinant(m))
    assert adjugate(m) @ m == PolyMatrix.scalar(n, determinant(m))


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_determinant_multiplicative(data):
    m = data.draw(square(QQ, 3))
    n = data.draw(square(QQ, 3))
    assert determinant(m @ n) == determinant(m) * determinant(n)


def test_non_square():
    m = PolyMatrix([[X[0], X[1]]])
    with pytest.raises(NotSquareError):
        determinant(m)
    with pytest.raises(NotSquareError):
        adjugate(m)
    with pytest.raises(DimensionMismatchError):
        m @ m


def test_ragged_and_empty():
    with pytest.raises(DimensionMismatchError):
        PolyMatrix([[X[0]], [X[0], X[1]]])
    with pytest.raises(DimensionMismatchError):
        PolyMatrix([])


def test_solve_linear():
    assert solve_linear([[2, 1], [1, 3]], [3, 5], QQ) == [Fraction(4, 5), Fraction(7, 5)]
    # free variable set to zero
    assert solve_linear([[1, 1]], [2], QQ) == [2, 0]
    assert solve_linear([[3, 1], [1, 1]], [1, 0], GF(7)) == [4, 3]
    with pytest.raises(NoSolutionError):
        solve_linear([[1, 1], [1, 1]], [0, 1], QQ)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=2, max_size=4),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_linear_consistent(m, x):
    rhs = [sum(a * b for a, b in zip(row, x)) for row in m]
    sol = solve_linear(m, rhs, QQ)
    assert [sum(a * b for a, b in zip(row, sol)) for row in m] == rhs


def test_kron_and_block():
    one = MultiPoly.constant(QQ, 3, 1)
    zero = MultiPoly.zero(QQ, 3)
    i2 = PolyMatrix.identity(2, QQ, 3)
    m = PolyMatrix([[X[0], X[1]], [X[2], one]])
    assert kron(i2, m)[3, 3] == one
    assert kron(i2, m)[2, 3] == X[1]
    assert kron(m, i2)[1, 1] == X[0]
    assert kron(m, i2)[0, 1] == zero
    b = block([[m, i2], [i2, m]])
    assert b.shape == (4, 4) and b[3, 2] == X[2] and b[0, 2] == one


def test_grading_infer_koszul_like():
    x0, x1, x2 = X
    m = PolyMatrix([[x0, x1 ** 2], [-x1, x0 ** 2]])
    assert grading_infer(m) == ((0, 0), (1, 2))


def test_grading_infer_errors():
    x0, x1, _ = X
    with pytest.raises(NotHomogeneousError):
        grading_infer(PolyMatrix([[x0 + x1 ** 2]]))
    with pytest.raises(InconsistentGradingError):
        grading_infer(PolyMatrix([[x0, x1], [x0, x1 ** 2]]))


def test_mat_mul_composes_grading():
    x0, x1, _ = X
    a = PolyMatrix([[x0, x1 ** 2], [-x1, x0 ** 2]], (0, 0), (1, 2))
    b = PolyMatrix([[x0 ** 2, -x1 ** 2], [x1, x0]], (1, 2), (3, 3))
    ab = mat_mul(a, b)
    assert ab.row_degrees == (0, 0) and ab.col_degrees == (3, 3)
    assert ab.grading_is_valid()
