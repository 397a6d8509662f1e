from fractions import Fraction as F

import sympy
from hypothesis import given, strategies as st

from negcurves.linalg import bareiss_echelon, nullspace, rank

entries = st.integers(-5, 5) | st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def matrices(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 7))
    return draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)), c


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(F(v).numerator, F(v).denominator) for v in row] for row in rows])


@given(matrices())
def test_rank_matches_sympy(mc):
    rows, _ = mc
    assert rank(rows) == to_sympy(rows).rank()


@given(matrices())
def test_nullspace_matches_sympy(mc):
    rows, c = mc
    basis = nullspace(rows, c)
    A = to_sympy(rows)
    assert len(basis) == len(A.nullspace())
    for v in basis:
        assert all(isinstance(e, int) for e in v)
        assert A * sympy.Matrix(v) == sympy.zeros(len(rows), 1)
    if basis:
        assert sympy.Matrix(basis).rank() == len(basis)


def test_echelon_is_integral():
    rows = [[2, 4, 1], [F(1, 2), 3, 0], [6, 0, 5]]
    ech, piv = bareiss_echelon(rows)
    assert piv == [0, 1, 2]
    assert all(isinstance(v, int) for row in ech for v in row)


def test_empty_rows():
    assert nullspace([], 3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
