from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fpltriangle.polyring import (MultiPoly, TPoly, alternant, antisymmetrize, loop_weight,
                                  one_plus_u_power, parse_t, vandermonde)


def naive_mul(p: dict, q: dict) -> dict:
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = out.get(e, 0) + x * y
    return {e: c for e, c in out.items() if c != 0}


def u(n, i):
    return MultiPoly.variable(n, i)


def test_basic_products():
    one = MultiPoly.constant(1)
    assert (one + u(1, 0)) * (one - u(1, 0)) == one - u(1, 0) * u(1, 0)
    assert vandermonde(3) * MultiPoly.constant(3) == vandermonde(3)
    capped = MultiPoly.constant(1, caps=(1,)) + MultiPoly.variable(1, 0, caps=(1,))
    assert (capped * capped).terms == {(0,): 1, (1,): 2}


def test_coefficient_of():
    p = MultiPoly(2, {(0, 0): 1, (1, 1): 3})
    assert p.coefficient_of((1, 1)) == 3
    assert vandermonde(2).coefficient_of((0, 1)) == 1
    assert p.coefficient_of((-1, 0)) == 0


def test_vandermonde():
    assert vandermonde(1).terms == {(0,): 1}
    assert vandermonde(2).terms == {(0, 1): 1, (1, 0): -1}
    v3 = vandermonde(3)
    assert len(v3.terms) == 6 and v3.coefficient_of((0, 1, 2)) == 1


def test_loop_weight():
    assert loop_weight(1).terms == {(0,): 1}
    assert loop_weight(2).terms == {(0, 0): 1, (0, 1): 1, (1, 1): 1}
    sym = loop_weight(2, TPoly.t())
    assert sym.coefficient_of((0, 1)) == TPoly.t()


def test_one_plus_u_power():
    assert one_plus_u_power(2, 0).terms == {(0, 0): 1}
    assert one_plus_u_power(1, 2).terms == {(0,): 1, (1,): 2, (2,): 1}
    assert one_plus_u_power(2, 1).coefficient_of((1, 1)) == 1
    assert one_plus_u_power(1, 3, t=2).coefficient_of((2,)) == 12


def test_antisymmetrize():
    half = antisymmetrize(u(2, 1))
    assert half.terms == {(0, 1): Fraction(1, 2), (1, 0): Fraction(-1, 2)}
    assert antisymmetrize(vandermonde(3)) == vandermonde(3)
    assert not antisymmetrize(u(2, 0) * u(2, 1))


def test_alternant_is_vandermonde():
    assert alternant((0, 1, 2)) == vandermonde(3)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        MultiPoly(2, {(-1, 0): 1})


def test_tpoly_arithmetic():
    t = TPoly.t()
    p = (1 + t) * (1 - t)
    assert p == 1 - t * t
    assert (t - t) == 0 and isinstance(t - t, int)
    assert p(3) == -8
    assert parse_t("symbolic") == t
    assert parse_t("1/2") == Fraction(1, 2)
    assert parse_t("4/2") == 2


terms = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=6)


@given(terms, terms, terms)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    p, q, r = MultiPoly(2, a), MultiPoly(2, b), MultiPoly(2, c)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(terms, terms)
@settings(max_examples=60)
def test_mul_matches_naive_convolution(a, b):
    assert (MultiPoly(2, a) * MultiPoly(2, b)).terms == naive_mul(
        {e: c for e, c in a.items() if c}, {e: c for e, c in b.items() if c})


@given(terms, terms, st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(0, 6))
@settings(max_examples=60)
def test_truncated_product_discards_only(a, b, caps, deg):
    full = naive_mul({e: c for e, c in a.items() if c}, {e: c for e, c in b.items() if c})
    kept = {e: c for e, c in full.items() if e[0] <= caps[0] and e[1] <= caps[1] and sum(e) <= deg}
    p = MultiPoly(2, a, caps=caps, max_degree=deg)
    q = MultiPoly(2, b, caps=caps, max_degree=deg)
    # truncating inputs first is harmless because exponents only grow under multiplication
    assert (p * q).terms == kept
