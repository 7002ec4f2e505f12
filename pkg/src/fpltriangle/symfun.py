"""Schur polynomials, their ``t``-deformation and Littlewood-Richardson data.

Partitions are passed either as ``Diagram`` objects or as increasing
sequences; in both cases they are read through ``seq_to_partition``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .combinat import Diagram, enumerate_basis, seq_to_partition, transpose
from .linalg import ExactMatrix
from .polyring import MultiPoly, alternant, one_plus_u_power, permutation_sign, vandermonde


def _as_partition(shape) -> tuple[int, ...]:
    if isinstance(shape, Diagram):
        return shape.partition
    shape = tuple(shape)
    if all(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        return seq_to_partition(shape)
    raise ValueError(f"{shape} is not an increasing sequence")


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = [p for p in parts if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


@lru_cache(maxsize=None)
def _schur_terms(parts: tuple[int, ...], k: int, caps: tuple | None, max_degree: int | None):
    """Monomials of s_parts(u_0..u_{k-1}) by removing horizontal strips from the last variable."""
    if len(parts) > k:
        return ()
    size = sum(parts)
    if max_degree is not None and size > max_degree:
        return ()
    if k == 0:
        return (((), 1),)
    padded = parts + (0,) * (k - len(parts))
    cap = None if caps is None else caps[k - 1]
    # mu_i ranges over [lambda_{i+1}, lambda_i] for i < k-1
    ranges = [range(padded[i + 1], padded[i] + 1) for i in range(k - 1)]
    out: dict = {}
    for mu in itertools.product(*ranges):
        strip = size - sum(mu)
        if cap is not None and strip > cap:
            continue
        sub_deg = None if max_degree is None else max_degree - strip
        mu = tuple(m for m in mu if m)
        for e, c in _schur_terms(mu, k - 1, None if caps is None else caps[:k - 1], sub_deg):
            key = e + (strip,)
            out[key] = out.get(key, 0) + c
    return tuple(out.items())


def schur_partition(parts: Sequence[int], n: int, caps=None, max_degree=None) -> MultiPoly:
    parts = tuple(p for p in parts if p)
    caps = None if caps is None else tuple(caps)
    return MultiPoly(n, dict(_schur_terms(parts, n, caps, max_degree)), caps, max_degree)


def schur(shape, n: int, caps=None, max_degree=None) -> MultiPoly:
    """s_shape(u_0, ..., u_{n-1}); zero if the shape has more than n rows."""
    return schur_partition(_as_partition(shape), n, caps, max_degree)


def _tilde_series(a: int, t, limit: int) -> list[tuple[int, object]]:
    """u^a (1 + t u)^(-a) as [(exponent, coeff)] up to exponent ``limit``."""
    if a == 0:
        return [(0, 1)]
    return [(a + k, comb(a + k - 1, k) * (-t) ** k) for k in range(max(limit - a, -1) + 1)]


def tilde_schur(shape, n: int, t=1, caps=None, max_degree=None) -> MultiPoly:
    """s_{shape'}(u/(1 + t u)) expanded as a truncated power series.

    The default truncation is the staircase box ``u_i <= 2i`` together with
    total degree ``n(n-1)/2``, which is all the bracket ever reads.
    """
    if caps is None:
        caps = tuple(2 * i for i in range(n))
    if max_degree is None:
        max_degree = n * (n - 1) // 2
    caps = tuple(caps)
    conj = conjugate(_as_partition(shape))
    base = schur_partition(conj, n, caps, max_degree)
    series_cache: dict = {}
    out: dict = {}
    for e, c in base.terms.items():
        factors = []
        for i, a in enumerate(e):
            key = (a, caps[i])
            if key not in series_cache:
                series_cache[key] = _tilde_series(a, t, caps[i])
            factors.append(series_cache[key])
        _expand_product(factors, c, max_degree, out)
    return MultiPoly(n, out, caps, max_degree)


def _expand_product(factors, coeff, max_degree, out):
    def rec(i, expo, c, deg):
        if i == len(factors):
            out[expo] = out.get(expo, 0) + c
            return
        for x, cx in factors[i]:
            if deg + x > max_degree:
                break
            rec(i + 1, expo + (x,), c * cx, deg + x)

    rec(0, (), coeff, 0)


def tilde_schur_alternant(shape, n: int, t=1, caps=None, max_degree=None) -> MultiPoly:
    """Same series as ``tilde_schur`` through the Schur expansion of the alternant.

    Expanding each ``(u/(1+tu))^a`` column of the alternant in powers of ``u``
    gives ``prod_i (1+t u_i)^(n-1)`` times a signed sum of ordinary Schur
    polynomials; this route shares no code with the substitution above.
    """
    if caps is None:
        caps = tuple(2 * i for i in range(n))
    if max_degree is None:
        max_degree = n * (n - 1) // 2
    caps = tuple(caps)
    conj = conjugate(_as_partition(shape))
    if len(conj) > n:
        return MultiPoly(n, {}, caps, max_degree)
    padded = list(conj) + [0] * (n - len(conj))
    a = [padded[n - 1 - j] + j for j in range(n)]
    room = max_degree - sum(conj)
    acc = MultiPoly(n, {}, caps, max_degree)
    for ks in _bounded_vectors(n, room):
        coeff = 1
        for aj, kj in zip(a, ks):
            if aj == 0:
                if kj:
                    coeff = 0
                    break
                continue
            coeff = coeff * comb(aj + kj - 1, kj) * (-t) ** kj
        if coeff == 0:
            continue
        shifted = [aj + kj for aj, kj in zip(a, ks)]
        if len(set(shifted)) < n:
            continue
        order = sorted(range(n), key=lambda j: shifted[j])
        sign = permutation_sign(order)
        seq = [shifted[j] for j in order]
        parts = seq_to_partition(seq)
        acc = acc + schur_partition(parts, n, caps, max_degree) * (sign * coeff)
    return acc * one_plus_u_power(n, n - 1, caps, max_degree, t)


def _bounded_vectors(n: int, total: int):
    if n == 0:
        yield ()
        return
    for k in range(total + 1):
        for rest in _bounded_vectors(n - 1, total - k):
            yield (k,) + rest


def schur_alternant_ratio(shape, n: int) -> MultiPoly:
    """Exact s_shape as det(u_i^{a_j}) / Vandermonde (test oracle; slow)."""
    parts = list(_as_partition(shape))
    if len(parts) > n:
        return MultiPoly(n, {})
    parts += [0] * (n - len(parts))
    seq = [parts[n - 1 - j] + j for j in range(n)]
    return _exact_divide(alternant(seq), vandermonde(n))


def _exact_divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    n = num.nvars
    remainder = dict(num.terms)
    lead = max(den.terms)
    lead_c = den.terms[lead]
    quotient: dict = {}
    while remainder:
        top = max(remainder)
        c = remainder[top]
        shift = tuple(x - y for x, y in zip(top, lead))
        if any(s < 0 for s in shift):
            raise ArithmeticError("polynomial division is not exact")
        q = Fraction(c) / lead_c
        q = q.numerator if q.denominator == 1 else q
        quotient[shift] = q
        for e, d in den.terms.items():
            key = tuple(x + y for x, y in zip(e, shift))
            v = remainder.get(key, 0) - q * d
            if v == 0:
                remainder.pop(key, None)
            else:
                remainder[key] = v
    return MultiPoly(n, quotient)


def lr_coefficient(sigma, tau, rho) -> int:
    """c^rho_{sigma tau} as the coefficient of u^rho in s_sigma * det(u_i^{tau_j})."""
    sig, ta, rh = (tuple(x.seq) if isinstance(x, Diagram) else tuple(x) for x in (sigma, tau, rho))
    n = len(rh)
    if len(sig) != n or len(ta) != n:
        raise ValueError("sigma, tau and rho must have the same length")
    s_part, t_part, r_part = seq_to_partition(sig), seq_to_partition(ta), seq_to_partition(rh)
    if sum(s_part) + sum(t_part) != sum(r_part):
        return 0
    s = schur_partition(s_part, n, caps=rh)
    return (s * alternant(ta, caps=rh)).coefficient_of(rh)


def hook_content_poly(shape, x):
    """prod over boxes (content + x) / hook, an exact polynomial in x."""
    parts = _as_partition(shape)
    conj = conjugate(parts)
    result = Fraction(1)
    for i, row in enumerate(parts):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            result = result * (j - i + x) * Fraction(1, hook)
    if isinstance(result, Fraction) and result.denominator == 1:
        return result.numerator
    return result


def schur_expand(p: MultiPoly, n: int, caps=None, max_degree=None) -> dict[Diagram, object]:
    """Coefficients of a symmetric polynomial on s_alpha, alpha in A_n.

    With truncation arguments the input is treated as a series and only the
    coefficients reachable inside the truncation are returned.
    """
    if caps is None and max_degree is None and not p.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    # drop the input's own truncation; only the product's bound matters here
    prod = MultiPoly(n, p.terms) * vandermonde(n, caps, max_degree)
    return {a: prod.coefficient_of(a.seq) for a in enumerate_basis(n)}


def involution_matrix(n: int, t=1) -> ExactMatrix:
    """Phi with columns s~_lambda expanded on s_mu, rows mu, both over A_n."""
    basis = enumerate_basis(n)
    caps = tuple(2 * i for i in range(n))
    top = n * (n - 1)
    cols = []
    for lam in basis:
        st = tilde_schur(lam, n, t, caps, top // 2)
        coeffs = schur_expand(st, n, caps, top)
        cols.append([coeffs[mu] for mu in basis])
    return ExactMatrix([list(r) for r in zip(*cols)], [str(b) for b in basis])


def transpose_partition(shape) -> tuple[int, ...]:
    return conjugate(_as_partition(shape))


def transpose_diagram(alpha: Diagram) -> Diagram:
    return transpose(alpha)
