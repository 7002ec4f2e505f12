"""Constant-term brackets and the tensor A_{sigma,alpha,tau}.

``<F>_alpha`` is the coefficient of ``prod u_i^alpha_i`` in
``F(u) * Delta(u) * prod_{i<j} (1 + t u_j + u_i u_j)``.  Since every index
satisfies ``alpha_i <= 2i`` all products are truncated to that box.
"""
from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .combinat import Diagram, boxes, check_general_sequence, enumerate_basis
from .polyring import MultiPoly, loop_weight, one_plus_u_power, vandermonde
from .symfun import schur, tilde_schur


class BracketContext:
    """Kernel and caches for one ``(n, t)``.

    Instances are safe to share; the caches only ever gain entries that are
    pure functions of their keys.
    """

    def __init__(self, n: int, t=1):
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        self.n = n
        self.t = t
        self.caps = tuple(2 * i for i in range(n))
        self.top = n * (n - 1)
        self._kernel = None
        self._weighted = {}
        self._schur_side = {}
        self._tilde = {}

    @property
    def kernel(self) -> MultiPoly:
        if self._kernel is None:
            self._kernel = (vandermonde(self.n, self.caps, self.top)
                            * loop_weight(self.n, self.t, self.caps, self.top))
        return self._kernel

    def weighted_kernel(self, power: int) -> MultiPoly:
        """kernel * prod (1 + t u_i)^power."""
        if power not in self._weighted:
            factor = one_plus_u_power(self.n, power, self.caps, self.top, self.t)
            self._weighted[power] = self.kernel * factor
        return self._weighted[power]

    def schur_side(self, tau: Diagram, power: int | None = None) -> MultiPoly:
        """s_tau * prod (1+t u_i)^power * kernel; ``power`` defaults to n-1."""
        power = self.n - 1 if power is None else power
        key = (tau, power)
        if key not in self._schur_side:
            s = schur(tau, self.n, self.caps, self.top)
            self._schur_side[key] = s * self.weighted_kernel(power)
        return self._schur_side[key]

    def tilde(self, sigma: Diagram) -> MultiPoly:
        if sigma not in self._tilde:
            self._tilde[sigma] = tilde_schur(sigma, self.n, self.t, self.caps, self.top // 2)
        return self._tilde[sigma]

    def basis(self) -> tuple[Diagram, ...]:
        return enumerate_basis(self.n)


def _seq(alpha) -> tuple[int, ...]:
    return tuple(alpha.seq) if isinstance(alpha, Diagram) else tuple(alpha)


def _check_index(ctx: BracketContext, alpha) -> tuple[int, ...]:
    seq = check_general_sequence(_seq(alpha))
    if len(seq) != ctx.n:
        raise ValueError(f"sequence {seq} has length {len(seq)}, expected {ctx.n}")
    return seq


def _pair(f: MultiPoly, g: MultiPoly, alpha: Sequence[int]):
    """Coefficient of u^alpha in f * g without forming the product."""
    total = 0
    for e, c in f.terms.items():
        rest = tuple(a - x for a, x in zip(alpha, e))
        if min(rest) < 0:
            continue
        d = g.terms.get(rest)
        if d is not None:
            total = total + c * d
    return total


def bracket(ctx: BracketContext, F: MultiPoly, alpha):
    seq = _check_index(ctx, alpha)
    if min(seq) < 0:
        return 0
    return _pair(F, ctx.kernel, seq)


def compute_Psi(ctx: BracketContext, alpha):
    seq = _check_index(ctx, alpha)
    if min(seq) < 0:
        return 0
    return ctx.kernel.coefficient_of(seq)


def psi_vector(ctx: BracketContext) -> list:
    return [compute_Psi(ctx, a) for a in ctx.basis()]


def compute_Psi_shifted(ctx: BracketContext, alpha, m: int):
    """<prod (1 + t u_i)^m>_alpha, the component at the m-fold embedding of alpha."""
    if m < 0:
        raise ValueError("m must be non-negative")
    seq = _check_index(ctx, alpha)
    if min(seq) < 0:
        return 0
    return ctx.weighted_kernel(m).coefficient_of(seq)


def compute_A(ctx: BracketContext, sigma: Diagram, alpha: Diagram, tau: Diagram):
    seq = _check_index(ctx, alpha)
    return _pair(ctx.tilde(sigma), ctx.schur_side(tau), seq)


def compute_A_weighted(ctx: BracketContext, sigma: Diagram, alpha: Diagram, tau: Diagram, power: int):
    """<s~_sigma s_tau prod(1+t u_i)^power>_alpha; power n-1 gives compute_A."""
    if power < 0:
        raise ValueError("power must be non-negative")
    seq = _check_index(ctx, alpha)
    return _pair(ctx.tilde(sigma), ctx.schur_side(tau, power), seq)


def compute_A_ext(ctx: BracketContext, tau: Diagram, alpha):
    """<s_tau prod(1+t u_i)^(n-1)>_alpha for any sequence with alpha_i <= 2i."""
    seq = _check_index(ctx, alpha)
    if min(seq) < 0:
        return 0
    return ctx.schur_side(tau).coefficient_of(seq)


def compute_A_shifted(ctx: BracketContext, sigma: Diagram, alpha: Diagram, tau: Diagram, m: int):
    """<prod(1+u_i)^(2m)>_{sigma,alpha,tau}: A at the m-fold embedding of alpha."""
    if m < 0:
        raise ValueError("m must be non-negative")
    seq = _check_index(ctx, alpha)
    return _pair(ctx.tilde(sigma), ctx.schur_side(tau, ctx.n - 1 + 2 * m), seq)


def compute_A_largest(ctx: BracketContext, sigma: Diagram, tau: Diagram):
    """A at the staircase through the Hall scalar product closed form.

    Both sides are expanded on Schur functions in ``n`` variables.  The ket
    has degree n(n-1)/2, so the bra is needed only up to that degree; this
    route does not use the staircase caps or the loop-weight kernel.
    """
    n = ctx.n
    half = n * (n - 1) // 2
    free = (half,) * n
    bra = tilde_schur(sigma, n, 1, free, half)
    bra = bra * schur(tau, n, None, half)
    bra = bra * one_plus_u_power(n, n - 1, None, half)
    bra = bra * _inverse_pair_product(n, half)
    ket = _ket(n)
    bra_delta = MultiPoly(n, bra.terms) * vandermonde(n, None, 2 * half)
    ket_delta = ket * vandermonde(n)
    total = 0
    for e, c in ket_delta.terms.items():
        if all(e[i] < e[i + 1] for i in range(n - 1)):
            total += c * bra_delta.coefficient_of(e)
    return total


def _inverse_pair_product(n: int, max_degree: int) -> MultiPoly:
    """prod_{i<=j} 1/(1 - u_i u_j) as a truncated series."""
    result = MultiPoly.constant(n, 1, max_degree=max_degree)
    for i in range(n):
        for j in range(i, n):
            terms = {}
            for k in range(max_degree // 2 + 1):
                e = [0] * n
                e[i] += k
                e[j] += k
                terms[tuple(e)] = 1
            result = result * MultiPoly(n, terms, max_degree=max_degree)
    return result


def _ket(n: int) -> MultiPoly:
    result = MultiPoly.constant(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            ei = [0] * n
            ei[i] = 1
            ej = [0] * n
            ej[j] = 1
            result = result * MultiPoly(n, {(0,) * n: 1, tuple(ei): 1, tuple(ej): 1})
    return result


def compute_A_from_Psi(ctx: BracketContext, sigma: Diagram, tau: Diagram) -> list:
    """Row vector Psi * C~(sigma) * C(tau) * C^(n-1)."""
    from .linalg import vecmat
    from .opalgebra import c_matrix, c_tilde_matrix, c_total

    ops = c_tilde_matrix(sigma, ctx.n, ctx.t) @ c_matrix(tau, ctx.n, ctx.t) @ (c_total(ctx.n, ctx.t) ** (ctx.n - 1))
    return vecmat(psi_vector(ctx), ops)


def a_tensor(ctx: BracketContext) -> list[list[list]]:
    """A[s][a][t] over the basis of A_n, every alpha read from shared factors.

    For fixed alpha the entry is a bilinear pairing of the tilde-Schur
    coefficients of sigma against the coefficients of the tau factor at
    complementary exponents, so each alpha costs one matrix product.
    """
    basis = ctx.basis()
    monos = [e for e in itertools.product(*(range(c + 1) for c in ctx.caps))
             if sum(e) <= ctx.top]
    where = {e: k for k, e in enumerate(monos)}
    S = _coeff_matrix([ctx.tilde(s) for s in basis], where)
    H = _coeff_matrix([ctx.schur_side(t) for t in basis], where)
    S, H = _narrow(S, H, len(monos))
    out = [[[0] * len(basis) for _ in basis] for _ in basis]
    for ia, alpha in enumerate(basis):
        betas = [e for e in itertools.product(*(range(a + 1) for a in alpha.seq))
                 if sum(e) <= ctx.top // 2]
        left = [where[b] for b in betas]
        right = [where[tuple(a - x for a, x in zip(alpha.seq, b))] for b in betas]
        block = S[:, left] @ H[:, right].T
        for s in range(len(basis)):
            for t in range(len(basis)):
                out[s][ia][t] = int(block[s, t]) if block.dtype != object else block[s, t]
    return out


def _coeff_matrix(polys, where) -> np.ndarray:
    mat = np.zeros((len(polys), len(where)), dtype=object)
    for r, p in enumerate(polys):
        for e, c in p.terms.items():
            k = where.get(e)
            if k is not None:
                mat[r, k] = c
    return mat


def _narrow(S: np.ndarray, H: np.ndarray, length: int):
    """Switch to int64 when no partial sum can overflow."""
    if not all(type(x) is int for x in itertools.chain(S.flat, H.flat)):
        return S, H
    smax = max((abs(x) for x in S.flat), default=0)
    hmax = max((abs(x) for x in H.flat), default=0)
    if smax * hmax * max(length, 1) < 2 ** 62:
        return S.astype(np.int64), H.astype(np.int64)
    return S, H


def a_matrix_sigma(ctx: BracketContext, sigma: Diagram) -> list[list]:
    """A(sigma)[tau][alpha]."""
    basis = ctx.basis()
    return [[compute_A(ctx, sigma, a, t) for a in basis] for t in basis]


def a_bar_matrix(ctx: BracketContext, alpha: Diagram) -> list[list]:
    """A-bar(alpha)[sigma][tau]."""
    basis = ctx.basis()
    return [[compute_A(ctx, s, alpha, t) for t in basis] for s in basis]


def degree_gap(sigma: Diagram, alpha: Diagram, tau: Diagram) -> int:
    return boxes(alpha) - boxes(sigma) - boxes(tau)


__all__ = [
    "BracketContext", "bracket", "compute_A", "compute_A_ext", "compute_Psi", "psi_vector",
    "compute_Psi_shifted", "compute_A_shifted", "compute_A_largest", "compute_A_from_Psi",
    "compute_A_weighted", "a_tensor", "a_matrix_sigma", "a_bar_matrix", "degree_gap",
]
