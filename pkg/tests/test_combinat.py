from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, strategies as st

from fpltriangle.combinat import (Diagram, LinkPattern, boxes, catalan, contains, diagram_from_partition,
                                  dyck_word, embed, empty, enumerate_basis, from_link_pattern, mirror,
                                  parse_diagram, rotate, staircase, to_link_pattern, transpose)


def brute_force_dyck(n):
    """Up-step positions of every Dyck word of length 2n."""
    out = []
    for word in product((1, -1), repeat=2 * n):
        h = 0
        ok = True
        for s in word:
            h += s
            if h < 0:
                ok = False
                break
        if ok and h == 0:
            out.append(tuple(i for i, s in enumerate(word) if s == 1))
    return out


@pytest.mark.parametrize("parts, n, expected", [
    ((), 3, (0, 1, 2)),
    ((1,), 3, (0, 1, 3)),
    ((2, 1), 3, (0, 2, 4)),
    ((2,), 3, (0, 1, 4)),
])
def test_diagram_from_partition(parts, n, expected):
    assert diagram_from_partition(parts, n).seq == expected


@pytest.mark.parametrize("seq, expected", [((0, 1, 2), 0), ((0, 2, 4), 3), ((0, 2, 3), 2)])
def test_boxes(seq, expected):
    assert boxes(Diagram(seq)) == expected


@pytest.mark.parametrize("a, b, expected", [
    ((0, 1, 2), (0, 2, 4), True),
    ((0, 2, 3), (0, 1, 4), False),
    ((0, 2, 4), (0, 2, 4), True),
])
def test_contains(a, b, expected):
    assert contains(Diagram(a), Diagram(b)) is expected


@pytest.mark.parametrize("seq, expected", [
    ((0, 1, 3), (0, 1, 3)),
    ((0, 1, 4), (0, 2, 3)),
    ((0, 2, 4), (0, 2, 4)),
])
def test_transpose(seq, expected):
    assert transpose(Diagram(seq)).seq == expected


@pytest.mark.parametrize("seq, pairs", [
    ((0, 1, 2), {(0, 5), (1, 4), (2, 3)}),
    ((0, 1, 3), {(1, 2), (3, 4), (0, 5)}),
    ((0, 2, 3), {(0, 1), (3, 4), (2, 5)}),
])
def test_to_link_pattern(seq, pairs):
    assert set(to_link_pattern(Diagram(seq)).pairs()) == pairs


@pytest.mark.parametrize("seq, m, expected", [
    ((0, 2, 4), 1, (0, 1, 3, 5)),
    ((0, 1, 2), 2, (0, 1, 2, 3, 4)),
    ((0, 1, 3), 0, (0, 1, 3)),
])
def test_embed(seq, m, expected):
    assert embed(Diagram(seq), m).seq == expected


def test_rotate_examples():
    nested = LinkPattern.from_pairs([(0, 3), (1, 2)])
    assert set(rotate(nested).pairs()) == {(0, 1), (2, 3)}
    assert set(rotate(LinkPattern.from_pairs([(0, 1), (2, 3)])).pairs()) == {(1, 2), (0, 3)}


def test_mirror_examples():
    assert from_link_pattern(mirror(to_link_pattern(Diagram((0, 2, 3))))) == Diagram((0, 1, 4))
    assert mirror(to_link_pattern(Diagram((0, 1, 3)))) == to_link_pattern(Diagram((0, 1, 3)))


def test_basis_order_n3():
    assert [d.seq for d in enumerate_basis(3)] == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (0, 1, 4), (0, 2, 4)]
    assert [d.seq for d in enumerate_basis(1)] == [(0,)]


@pytest.mark.parametrize("n", range(1, 8))
def test_basis_matches_dyck_words(n):
    basis = enumerate_basis(n)
    assert len(basis) == catalan(n)
    assert sorted(d.seq for d in basis) == sorted(brute_force_dyck(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_order_refines_inclusion(n):
    basis = enumerate_basis(n)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if a != b and contains(a, b):
                assert i < j


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trips(n):
    for d in enumerate_basis(n):
        pi = to_link_pattern(d)
        assert from_link_pattern(pi) == d
        assert transpose(transpose(d)) == d
        assert mirror(mirror(pi)) == pi
        r = pi
        for _ in range(2 * n):
            r = rotate(r)
        assert r == pi
        assert contains(empty(n), d) and contains(d, staircase(n))
        assert boxes(embed(d, 2)) == boxes(d)


def test_dyck_word():
    assert dyck_word(Diagram((0, 2, 3))) == "UDUUDD"


def test_parse_diagram():
    assert parse_diagram("0,1,3") == Diagram((0, 1, 3))
    assert parse_diagram("p:2,1", 3) == Diagram((0, 2, 4))
    with pytest.raises(ValueError):
        parse_diagram("p:1")
    with pytest.raises(ValueError):
        parse_diagram("0,1,3", 4)


@pytest.mark.parametrize("seq", [(1,), (0, 3), (0, 2, 2), (0, 1, 5)])
def test_invalid_diagrams(seq):
    with pytest.raises(ValueError):
        Diagram(seq)


def test_invalid_link_patterns():
    with pytest.raises(ValueError):
        LinkPattern((2, 3, 0, 1))  # crossing
    with pytest.raises(ValueError):
        LinkPattern((0, 1))


diagrams = st.integers(1, 6).flatmap(lambda n: st.sampled_from(enumerate_basis(n)))


@given(diagrams)
def test_transpose_preserves_size_and_inclusion(d):
    t = transpose(d)
    assert boxes(t) == boxes(d)
    for other in enumerate_basis(d.n):
        assert contains(other, d) == contains(transpose(other), t)


@given(diagrams, st.integers(0, 3))
def test_embed_injective_and_monotone(d, m):
    for other in enumerate_basis(d.n):
        assert (embed(other, m) == embed(d, m)) == (other == d)
        assert contains(other, d) == contains(embed(other, m), embed(d, m))
