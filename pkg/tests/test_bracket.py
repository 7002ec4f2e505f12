from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fpltriangle.bracket import (BracketContext, a_bar_matrix, a_matrix_sigma, a_tensor, bracket,
                                 compute_A, compute_A_ext, compute_A_from_Psi, compute_A_largest,
                                 compute_A_shifted, compute_A_weighted, compute_Psi,
                                 compute_Psi_shifted, degree_gap, psi_vector)
from fpltriangle.combinat import Diagram, boxes, contains, embed, empty, enumerate_basis, staircase, transpose
from fpltriangle.polyring import MultiPoly, TPoly, loop_weight, one_plus_u_power, specialize, vandermonde
from fpltriangle.symfun import lr_coefficient, schur_alternant_ratio, tilde_schur_alternant


def untruncated_A(n, sigma, alpha, tau, t=1, power=None):
    """Coefficient extraction from full products, sharing no truncation logic with the engine."""
    power = n - 1 if power is None else power
    half = n * (n - 1) // 2
    left = tilde_schur_alternant(sigma, n, t, caps=(half,) * n, max_degree=half)
    f = MultiPoly(n, left.terms) * schur_alternant_ratio(tau, n) * one_plus_u_power(n, power, t=t)
    return (f * vandermonde(n) * loop_weight(n, t)).coefficient_of(alpha.seq)


@pytest.fixture(scope="module")
def ctx3():
    return BracketContext(3)


def test_bracket_examples(ctx3):
    one = MultiPoly.constant(3)
    assert bracket(ctx3, one, (0, 1, 2)) == 1
    assert bracket(ctx3, one, (0, 2, 4)) == 2
    assert bracket(ctx3, one, (-1, 1, 2)) == 0
    with pytest.raises(ValueError):
        bracket(ctx3, one, (0, 3, 4))


def test_psi_n3(ctx3, matrices_n3):
    assert [str(x) for x in psi_vector(ctx3)] == matrices_n3["data"]["Psi"]
    assert psi_vector(BracketContext(1)) == [1]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("t", [1, 0, 3, Fraction(-1, 2), TPoly.t()])
def test_psi_of_empty_is_one(n, t):
    assert compute_Psi(BracketContext(n, t), empty(n)) == 1


def test_symbolic_psi_specializes():
    sym = psi_vector(BracketContext(4, TPoly.t()))
    for t in (0, 2, Fraction(1, 3)):
        assert [specialize(x, t) for x in sym] == psi_vector(BracketContext(4, t))


def test_compute_A_examples(ctx3):
    basis = enumerate_basis(3)
    for s in basis:
        for t in basis:
            assert compute_A(ctx3, s, empty(3), t) == (1 if s == t == empty(3) else 0)
    box = Diagram((0, 1, 3))
    assert compute_A(ctx3, empty(3), staircase(3), empty(3)) == 17
    assert compute_A(ctx3, box, staircase(3), box) == 7


@pytest.mark.parametrize("n, t", [(2, 1), (3, 1), (3, 2), (3, Fraction(1, 2))])
def test_compute_A_against_untruncated_products(n, t):
    ctx = BracketContext(n, t)
    basis = enumerate_basis(n)
    for s in basis:
        for a in basis:
            for tau in basis:
                assert compute_A(ctx, s, a, tau) == untruncated_A(n, s, a, tau, t)


def test_weighted_against_untruncated():
    ctx = BracketContext(3)
    for s in enumerate_basis(3):
        for tau in enumerate_basis(3):
            assert compute_A_weighted(ctx, s, staircase(3), tau, 4) == untruncated_A(3, s, staircase(3), tau, 1, 4)


def test_compute_A_ext():
    ctx3 = BracketContext(3)
    full = one_plus_u_power(3, 2) * vandermonde(3) * loop_weight(3)
    assert compute_A_ext(ctx3, empty(3), (0, 2, 2)) == full.coefficient_of((0, 2, 2))
    assert compute_A_ext(ctx3, empty(3), (0, 2, 1)) == full.coefficient_of((0, 2, 1))
    assert compute_A_ext(ctx3, empty(3), (-1, 2, 3)) == 0
    with pytest.raises(ValueError):
        compute_A_ext(BracketContext(2), empty(2), (1, 1))
    for a in enumerate_basis(3):
        for tau in enumerate_basis(3):
            assert compute_A_ext(ctx3, tau, a.seq) == compute_A(ctx3, empty(3), a, tau)


def test_psi_shifted():
    ctx2 = BracketContext(2)
    assert compute_Psi_shifted(ctx2, Diagram((0, 2)), 0) == compute_Psi(ctx2, Diagram((0, 2)))
    assert compute_Psi_shifted(ctx2, Diagram((0, 2)), 1) == 2
    assert compute_Psi_shifted(BracketContext(3), empty(3), 1) == 1


def test_embedding_is_not_stable():
    # the component at the embedded diagram differs from the smaller Psi
    small = compute_Psi(BracketContext(2), Diagram((0, 2)))
    big = compute_Psi(BracketContext(3), embed(Diagram((0, 2)), 1))
    assert (small, big) == (1, 2)


def test_compute_A_shifted():
    ctx2 = BracketContext(2)
    ctx3 = BracketContext(3)
    basis = enumerate_basis(2)
    assert compute_A_shifted(ctx2, empty(2), Diagram((0, 2)), empty(2), 1) == 4
    for s in basis:
        for a in basis:
            for t in basis:
                assert compute_A_shifted(ctx2, s, a, t, 0) == compute_A(ctx2, s, a, t)
                assert compute_A_shifted(ctx2, s, a, t, 1) == compute_A(ctx3, embed(s, 1), embed(a, 1), embed(t, 1))


def test_compute_A_largest_examples(ctx3):
    box = Diagram((0, 1, 3))
    assert compute_A_largest(ctx3, empty(3), empty(3)) == 17
    assert compute_A_largest(ctx3, empty(3), box) == 13
    assert compute_A_largest(ctx3, staircase(3), empty(3)) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_compute_A_largest_matches_tensor(n):
    ctx = BracketContext(n)
    basis = enumerate_basis(n)
    top = basis.index(staircase(n))
    tensor = a_tensor(ctx)
    for si, s in enumerate(basis):
        for ti, t in enumerate(basis):
            assert compute_A_largest(ctx, s, t) == tensor[si][top][ti]


def test_compute_A_from_psi(ctx3):
    box = Diagram((0, 1, 3))
    assert compute_A_from_Psi(ctx3, empty(3), empty(3)) == [1, 4, 7, 6, 17]
    assert compute_A_from_Psi(ctx3, box, box) == [0, 0, 1, 1, 7]
    assert compute_A_from_Psi(BracketContext(1), empty(1), empty(1)) == [1]


def test_matrix_views(ctx3, matrices_n3):
    for a in enumerate_basis(3):
        assert [[str(x) for x in r] for r in a_bar_matrix(ctx3, a)] == matrices_n3["data"][f"Abar[{a}]"]
    assert [[str(x) for x in r] for r in a_matrix_sigma(ctx3, empty(3))] == matrices_n3["data"]["A_empty"]


@pytest.mark.parametrize("n, t", [(3, 1), (4, 1), (3, Fraction(1, 2)), (3, TPoly.t())])
def test_tensor_matches_pointwise(n, t):
    ctx = BracketContext(n, t)
    basis = enumerate_basis(n)
    tensor = a_tensor(ctx)
    for si, s in enumerate(basis):
        for ai, a in enumerate(basis):
            for ti, tau in enumerate(basis):
                assert tensor[si][ai][ti] == compute_A(ctx, s, a, tau)


_tensors = {n: a_tensor(BracketContext(n)) for n in (1, 2, 3, 4)}
triples = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), *(st.integers(0, len(enumerate_basis(n)) - 1),) * 3))


@given(triples)
@settings(max_examples=200)
def test_degree_and_triangularity(triple):
    n, si, ai, ti = triple
    basis = enumerate_basis(n)
    s, a, t = basis[si], basis[ai], basis[ti]
    value = _tensors[n][si][ai][ti]
    gap = degree_gap(s, a, t)
    if gap < 0:
        assert value == 0
    if gap == 0:
        assert value == lr_coefficient(transpose(s), t, a)
    if value:
        assert contains(t, a) and contains(transpose(s), a)
    assert gap == boxes(a) - boxes(s) - boxes(t)
