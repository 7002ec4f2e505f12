from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from fpltriangle.combinat import Diagram, contains, diagram_from_partition, enumerate_basis, transpose
from fpltriangle.linalg import ExactMatrix, vecmat
from fpltriangle.polyring import MultiPoly, TPoly, elementary, one_plus_u_power
from fpltriangle.symfun import (hook_content_poly, involution_matrix, lr_coefficient, schur,
                                schur_alternant_ratio, schur_expand, tilde_schur, tilde_schur_alternant)


def count_ssyt(parts, m):
    """Semistandard tableaux of the given shape with entries 1..m, by brute force."""
    cells = [(i, j) for i, row in enumerate(parts) for j in range(row)]
    total = 0
    for fill in product(range(1, m + 1), repeat=len(cells)):
        f = dict(zip(cells, fill))
        rows_ok = all(f[(i, j)] <= f[(i, j + 1)] for (i, j) in cells if (i, j + 1) in f)
        cols_ok = all(f[(i, j)] < f[(i + 1, j)] for (i, j) in cells if (i + 1, j) in f)
        total += rows_ok and cols_ok
    return total


def test_schur_examples():
    assert schur(Diagram((0, 1, 2)), 3).terms == {(0, 0, 0): 1}
    assert schur(Diagram((0, 2)), 2).terms == {(1, 0): 1, (0, 1): 1}
    assert schur(diagram_from_partition((1, 1), 3), 3) == elementary(3, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_matches_bialternant(n):
    for d in enumerate_basis(n):
        assert schur(d, n) == schur_alternant_ratio(d, n)


@pytest.mark.parametrize("t", [1, 2, Fraction(1, 2), -1, TPoly.t()])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_tilde_schur_two_routes(n, t):
    for d in enumerate_basis(n):
        assert tilde_schur(d, n, t) == tilde_schur_alternant(d, n, t)


def test_tilde_schur_leading_term():
    box = Diagram((0, 2))
    st_ = tilde_schur(box, 2, 1, caps=(3, 3), max_degree=3)
    low = {e: c for e, c in st_.terms.items() if sum(e) == 1}
    assert low == schur(box, 2).terms
    assert tilde_schur(Diagram((0, 1)), 2).terms == {(0, 0): 1}


def test_lr_examples():
    box, empty, rho = Diagram((0, 1, 3)), Diagram((0, 1, 2)), Diagram((0, 2, 4))
    assert lr_coefficient(box, empty, box) == 1
    assert lr_coefficient(box, Diagram((0, 2, 3)), rho) == 1
    assert lr_coefficient(box, Diagram((0, 1, 4)), rho) == 1
    assert lr_coefficient(box, box, rho) == 0


@pytest.mark.parametrize("n", [3, 4])
def test_lr_against_schur_products(n):
    basis = enumerate_basis(n)
    for a in basis:
        for b in basis:
            expanded = schur_expand(schur(a, n) * schur(b, n), n)
            for rho in basis:
                assert expanded[rho] == lr_coefficient(a, b, rho)


def test_hook_content_examples():
    basis = enumerate_basis(3)
    assert all(hook_content_poly(Diagram((0, 1, 2)), x) == 1 for x in (-3, 0, 5))
    assert [hook_content_poly(d, 0) for d in basis] == [1, 0, 0, 0, 0]
    assert [hook_content_poly(transpose(d), -2) for d in basis] == [1, -2, 1, 3, -2]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_hook_content_counts_tableaux(m):
    for d in enumerate_basis(3) + enumerate_basis(4):
        assert hook_content_poly(d, m) == count_ssyt(d.partition, m)


def test_involution_examples(matrices_n3):
    assert involution_matrix(1).rows == [[1]]
    assert involution_matrix(3).to_strings() == matrices_n3["data"]["Phi"]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_involution_squares_to_identity_and_fixes_elementary_sum(n):
    phi = involution_matrix(n)
    assert phi @ phi == ExactMatrix.identity(phi.shape[0])
    v = [1 if d.partition == (1,) * len(d.partition) else 0 for d in enumerate_basis(n)]
    assert vecmat(v, phi.T) == v


def test_tilde_expansion_support_and_leading_coefficient():
    n = 4
    basis = enumerate_basis(n)
    phi = involution_matrix(n)
    for c, sigma in enumerate(basis):
        conj = transpose(sigma)
        assert phi[basis.index(conj)][c] == 1
        for r, beta in enumerate(basis):
            if phi[r][c]:
                assert contains(conj, beta)


def test_schur_expand_examples():
    assert schur_expand(MultiPoly.constant(2), 2) == {Diagram((0, 1)): 1, Diagram((0, 2)): 0}
    e1 = elementary(2, 1)
    # e_1^2 = s_2 + s_11 and neither shape lies in A_2
    assert schur_expand(e1 * e1, 2) == {Diagram((0, 1)): 0, Diagram((0, 2)): 0}
    coeffs = schur_expand(one_plus_u_power(3, 1), 3)
    assert coeffs == {Diagram((0, 1, 2)): 1, Diagram((0, 1, 3)): 1, Diagram((0, 2, 3)): 1,
                      Diagram((0, 1, 4)): 0, Diagram((0, 2, 4)): 0}
    with pytest.raises(ValueError):
        schur_expand(MultiPoly.variable(2, 0), 2)


@given(st.sampled_from(enumerate_basis(4)), st.integers(-6, 6))
def test_hook_content_vanishes_or_sign(d, x):
    value = hook_content_poly(d, x)
    # P_lambda(x) vanishes exactly when some content equals -x
    contents = {j - i for i, row in enumerate(d.partition) for j in range(row)}
    assert (value == 0) == (-x in contents)
