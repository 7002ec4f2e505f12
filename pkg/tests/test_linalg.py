from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fpltriangle.linalg import (ExactMatrix, commuting_determinant, matvec, primitive_integer_vector,
                                vecmat)

square = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(st.integers(-4, 4), min_size=k, max_size=k), min_size=k, max_size=k))


def det(rows):
    """Cofactor expansion, independent of the elimination code."""
    if len(rows) == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]]) for j in range(len(rows)))


@given(square)
@settings(max_examples=80)
def test_inverse_or_singular(rows):
    m = ExactMatrix(rows)
    if det(rows) == 0:
        assert m.rank() < len(rows)
        with pytest.raises(ArithmeticError):
            m.inverse()
    else:
        assert m.rank() == len(rows)
        assert m @ m.inverse() == ExactMatrix.identity(len(rows))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
@settings(max_examples=80)
def test_nullspace(rows):
    m = ExactMatrix(rows)
    kernel = m.nullspace()
    assert len(kernel) + m.rank() == 4
    for v in kernel:
        assert matvec(m, v) == [0] * len(rows)


def test_unit_upper_inverse():
    m = ExactMatrix([[1, 2, 3], [0, 1, 4], [0, 0, 1]])
    assert m.is_unit_upper_triangular()
    assert m.inverse().rows == [[1, -2, 5], [0, 1, -4], [0, 0, 1]]


def test_fraction_inverse():
    m = ExactMatrix([[2, 1], [1, 1]])
    assert m.inverse().rows == [[1, -1], [-1, 2]]
    assert ExactMatrix([[2]]).inverse().rows == [[Fraction(1, 2)]]


def test_vecmat_and_matvec():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert vecmat([1, 1], m) == [4, 6]
    assert matvec(m, [1, 1]) == [3, 7]
    with pytest.raises(ValueError):
        vecmat([1, 2, 3], m)


def test_primitive_integer_vector():
    assert primitive_integer_vector([Fraction(1, 2), 1, Fraction(3, 2)]) == [1, 2, 3]
    assert primitive_integer_vector([-2, -4]) == [1, 2]


def test_commuting_determinant_scalar_blocks():
    a = ExactMatrix([[2]])
    b = ExactMatrix([[3]])
    c = ExactMatrix([[5]])
    d = ExactMatrix([[7]])
    assert commuting_determinant([[a, b], [c, d]], 1).rows == [[2 * 7 - 3 * 5]]


def test_ragged_rejected():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
