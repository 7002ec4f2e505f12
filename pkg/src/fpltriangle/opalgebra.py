"""Structural operators: change of basis, multiplication operators, mirror.

Conventions.  Vectors are rows and operators act on the right, so a matrix
entry ``M[r][c]`` is ``M^r_c``.  Rows and columns are indexed by
``enumerate_basis(n)``; link patterns are identified with diagrams through
``to_link_pattern``.  ``t`` may be an int, a ``Fraction`` or the formal
``TPoly.t()``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct
from typing import Sequence

from .bracket import BracketContext, compute_A_ext, psi_vector
from .combinat import (Diagram, LinkPattern, diagram_from_partition, embed, enumerate_basis,
                       from_link_pattern, mirror, to_link_pattern)
from .linalg import ExactMatrix, commuting_determinant, vecmat
from .polyring import TPoly
from .symfun import conjugate, involution_matrix, lr_coefficient, schur, tilde_schur


class ChebyshevTable:
    """U_i with U_{i+1} = -t U_i - U_{i-1}, U_{-1} = 0, U_0 = 1, for all integers i."""

    def __init__(self, t=1):
        self.t = t
        self._values = {-1: 0, 0: 1}

    def __getitem__(self, i: int):
        if i not in self._values:
            if i > 0:
                self._values[i] = -self.t * self[i - 1] - self[i - 2]
            else:
                self._values[i] = -self.t * self[i + 1] - self[i + 2]
        return self._values[i]


@lru_cache(maxsize=None)
def _chebyshev(t) -> ChebyshevTable:
    return ChebyshevTable(t)


@lru_cache(maxsize=None)
def context(n: int, t=1) -> BracketContext:
    """Shared bracket context per (n, t)."""
    return BracketContext(n, t)


def _labels(n: int) -> list[str]:
    return [str(a) for a in enumerate_basis(n)]


def _as_diagram(lam, n: int) -> Diagram:
    if isinstance(lam, Diagram):
        if lam.n != n:
            raise ValueError(f"{lam} has size {lam.n}, expected {n}")
        return lam
    return diagram_from_partition(lam, n)


# change of basis

def p_entry(pi: LinkPattern, alpha: Sequence[int], t=1):
    """P^pi_alpha for a non-decreasing sequence alpha."""
    alpha = tuple(alpha.seq) if isinstance(alpha, Diagram) else tuple(alpha)
    if any(alpha[k] > alpha[k + 1] for k in range(len(alpha) - 1)):
        raise ValueError(f"{alpha} is not non-decreasing")
    U = _chebyshev(t)
    value = 1
    for i, j in pi.pairs():
        count = sum(1 for a in alpha if i <= a < j)
        value = value * U[count - (j - i + 1) // 2]
        if value == 0:
            return 0
    return value


@lru_cache(maxsize=None)
def p_matrix(n: int, t=1) -> ExactMatrix:
    basis = enumerate_basis(n)
    rows = [[p_entry(to_link_pattern(pi), a.seq, t) for a in basis] for pi in basis]
    m = ExactMatrix(rows, _labels(n))
    if not m.is_unit_upper_triangular():
        raise AssertionError(f"P is not unit upper triangular at n={n}, t={t}")
    return m


@lru_cache(maxsize=None)
def p_inverse(n: int, t=1) -> ExactMatrix:
    return p_matrix(n, t).inverse()


def p_ext_entry(pi: LinkPattern, gamma: Sequence[int], t=1):
    """P^ext for a non-decreasing sequence; zero when some entry is negative."""
    if min(gamma) < 0:
        return 0
    return p_entry(pi, gamma, t)


# K and the multiplication operators

@lru_cache(maxsize=None)
def _a_empty_inverse(n: int, t) -> ExactMatrix:
    return a_empty(n, t).inverse()


@lru_cache(maxsize=None)
def a_empty(n: int, t=1) -> ExactMatrix:
    """A(empty)[tau][alpha] = <s_tau prod(1+t u)^(n-1)>_alpha."""
    ctx = context(n, t)
    basis = enumerate_basis(n)
    return ExactMatrix([[compute_A_ext(ctx, tau, a) for a in basis] for tau in basis], _labels(n))


@lru_cache(maxsize=None)
def k_column(n: int, alpha: tuple[int, ...], t=1) -> tuple:
    """Column K^._alpha over A_n for a sequence with alpha_i <= 2i."""
    if len(alpha) != n:
        raise ValueError(f"sequence {alpha} does not have length {n}")
    if min(alpha) < 0:
        return (0,) * len(enumerate_basis(n))
    ctx = context(n, t)
    ext = [compute_A_ext(ctx, tau, alpha) for tau in enumerate_basis(n)]
    inv = _a_empty_inverse(n, t)
    return tuple(sum((inv[r][c] * ext[c] for c in range(len(ext)) if ext[c] != 0), 0)
                 for r in range(len(ext)))


def k_matrix(n: int, columns: Sequence[Sequence[int]], t=1) -> ExactMatrix:
    cols = [k_column(n, tuple(c), t) for c in columns]
    return ExactMatrix([list(r) for r in zip(*cols)], _labels(n))


def c_ext_z_entry(beta: Sequence[int], alpha: Sequence[int], z):
    diff = [a - b for a, b in zip(alpha, beta)]
    if all(d in (0, 1) for d in diff):
        return z ** sum(diff)
    return 0


def c_ext_z(alpha: Sequence[int], z) -> dict[tuple[int, ...], object]:
    """Column alpha of C^ext_z: beta = alpha - eps over eps in {0,1}^n."""
    out = {}
    for eps in iproduct((0, 1), repeat=len(alpha)):
        beta = tuple(a - e for a, e in zip(alpha, eps))
        out[beta] = z ** sum(eps)
    return out


def _elementary_ext(alpha: Sequence[int], k: int) -> dict:
    return {tuple(a - e for a, e in zip(alpha, eps)): 1
            for eps in iproduct((0, 1), repeat=len(alpha)) if sum(eps) == k}


def _series_ext(poly, alpha: Sequence[int]) -> dict:
    """Column alpha of the monomial-shift matrix of a (truncated) series."""
    out = {}
    for e, c in poly.terms.items():
        beta = tuple(a - x for a, x in zip(alpha, e))
        if min(beta) < 0:
            continue
        out[beta] = out.get(beta, 0) + c
    return out


def _through_k(n: int, t, columns: list[dict]) -> ExactMatrix:
    size = len(enumerate_basis(n))
    cols = []
    for col in columns:
        acc = [0] * size
        for beta, c in col.items():
            if c == 0 or min(beta) < 0:
                continue
            kc = k_column(n, beta, t)
            for r in range(size):
                if kc[r] != 0:
                    acc[r] = acc[r] + c * kc[r]
        cols.append(acc)
    return ExactMatrix([list(r) for r in zip(*cols)], _labels(n))


@lru_cache(maxsize=None)
def c_matrix(lam, n: int, t=1) -> ExactMatrix:
    """C(lambda): <s_lambda F>_alpha = sum_beta C^beta_alpha <F>_beta, built as K C^ext."""
    lam = _as_diagram(lam, n)
    ctx = context(n, t)
    s = schur(lam, n, ctx.caps, ctx.top)
    return _through_k(n, t, [_series_ext(s, a.seq) for a in enumerate_basis(n)])


@lru_cache(maxsize=None)
def c_tilde_matrix(lam, n: int, t=1) -> ExactMatrix:
    lam = _as_diagram(lam, n)
    ctx = context(n, t)
    st = tilde_schur(lam, n, t, ctx.caps, ctx.top // 2)
    return _through_k(n, t, [_series_ext(st, a.seq) for a in enumerate_basis(n)])


@lru_cache(maxsize=None)
def c_total(n: int, t=1) -> ExactMatrix:
    """C = sum_i t^i C(e_i), multiplication by prod (1 + t u_i)."""
    return c_z_matrix(n, t, t)


@lru_cache(maxsize=None)
def c_z_matrix(n: int, z, t=1) -> ExactMatrix:
    """Multiplication by prod (1 + z u_i), K route."""
    return _through_k(n, t, [c_ext_z(a.seq, z) for a in enumerate_basis(n)])


def c_elementary(n: int, k: int, t=1) -> ExactMatrix:
    """C(e_k) through K."""
    if k < 0 or k > n:
        return ExactMatrix.zeros(len(enumerate_basis(n)), labels=_labels(n))
    return _through_k(n, t, [_elementary_ext(a.seq, k) for a in enumerate_basis(n)])


# link-pattern basis

def _conjugate_by_p(m: ExactMatrix, n: int, t) -> ExactMatrix:
    return p_matrix(n, t) @ m @ p_inverse(n, t)


def _via_p_ext(n: int, t, columns: list[dict]) -> ExactMatrix:
    """P^ext C^ext P^{-1} for C^ext columns supported on non-decreasing sequences."""
    basis = enumerate_basis(n)
    patterns = [to_link_pattern(b) for b in basis]
    cols = []
    for col in columns:
        cols.append([sum((c * p_ext_entry(pi, gamma, t) for gamma, c in col.items() if c != 0), 0)
                     for pi in patterns])
    pc = ExactMatrix([list(r) for r in zip(*cols)], _labels(n))
    return pc @ p_inverse(n, t)


def c_link(lam, n: int, t=1) -> ExactMatrix:
    """c(lambda) = P C(lambda) P^{-1} via K."""
    return _conjugate_by_p(c_matrix(lam, n, t), n, t)


def c_link_total(n: int, t=1) -> ExactMatrix:
    return _conjugate_by_p(c_total(n, t), n, t)


def c_z_link_kroute(n: int, z, t=1) -> ExactMatrix:
    return _conjugate_by_p(c_z_matrix(n, z, t), n, t)


def c_z_link_pext(n: int, z, t=1) -> ExactMatrix:
    return _via_p_ext(n, t, [c_ext_z(a.seq, z) for a in enumerate_basis(n)])


def c_elementary_link_pext(n: int, k: int, t=1) -> ExactMatrix:
    if k == 0:
        return ExactMatrix.identity(len(enumerate_basis(n)), _labels(n))
    if k < 0 or k > n:
        return ExactMatrix.zeros(len(enumerate_basis(n)), labels=_labels(n))
    return _via_p_ext(n, t, [_elementary_ext(a.seq, k) for a in enumerate_basis(n)])


def c_link_jacobi_trudi(lam, n: int, t=1) -> ExactMatrix:
    """c(lambda) = det(c(e_{lambda'_i - i + j})) from the elementary ones."""
    lam = _as_diagram(lam, n)
    cols = conjugate(lam.partition)
    size = len(enumerate_basis(n))
    if not cols:
        return ExactMatrix.identity(size, _labels(n))
    cache = {}

    def e(k):
        if k not in cache:
            cache[k] = c_elementary_link_pext(n, k, t)
        return cache[k]

    entries = [[e(cols[i] - i + j) for j in range(len(cols))] for i in range(len(cols))]
    return commuting_determinant(entries, size)


# Littlewood-Richardson side

@lru_cache(maxsize=None)
def lr_matrix(lam, n: int) -> ExactMatrix:
    """LR(lambda)[mu][tau] = c^mu_{lambda, tau}."""
    lam = _as_diagram(lam, n)
    basis = enumerate_basis(n)
    return ExactMatrix([[lr_coefficient(lam, tau, mu) for tau in basis] for mu in basis], _labels(n))


@lru_cache(maxsize=None)
def phi_matrix(n: int, t=1) -> ExactMatrix:
    return involution_matrix(n, t)


def lr_tilde_matrix(lam, n: int, t=1) -> ExactMatrix:
    phi = phi_matrix(n, t)
    return phi @ lr_matrix(lam, n) @ phi


def lr_total(n: int) -> ExactMatrix:
    """Sum of LR(e_i) over i = 0..n-1 (multiplication by prod(1+u_i))."""
    basis = enumerate_basis(n)
    total = ExactMatrix.zeros(len(basis), labels=_labels(n))
    for k in range(n):
        total = total + lr_matrix(diagram_from_partition((1,) * k, n), n)
    return total


# mirror

@lru_cache(maxsize=None)
def r_matrix(n: int, t=1) -> ExactMatrix:
    """R = A(empty)^{-1} Phi^T A(empty)."""
    a0 = a_empty(n, t)
    return _a_empty_inverse(n, t) @ phi_matrix(n, t).T @ a0


def r_link(n: int, t=1) -> ExactMatrix:
    return _conjugate_by_p(r_matrix(n, t), n, t)


def mirror_permutation(n: int) -> ExactMatrix:
    basis = enumerate_basis(n)
    index = {b: i for i, b in enumerate(basis)}
    rows = [[0] * len(basis) for _ in basis]
    for i, b in enumerate(basis):
        rows[i][index[from_link_pattern(mirror(to_link_pattern(b)))]] = 1
    return ExactMatrix(rows, _labels(n))


# recurrences

def psi_link(n: int, t=1) -> list:
    """psi = Psi P^{-1} (link-pattern basis) from the bracket."""
    return vecmat(psi_vector(context(n, t)), p_inverse(n, t))


def recurrence_step(psi_n: Sequence, m: int = 1, t=1) -> list:
    """Entries psi_{(pi)_m} at size n+m for pi in A_n, as psi_n c^m."""
    n = _size_of(len(psi_n))
    c = c_link_total(n, t)
    v = list(psi_n)
    for _ in range(m):
        v = vecmat(v, c)
    return v


def recurrence_step_general_t(psi_n: Sequence, t=1) -> list:
    """Full size-(n+1) vector: embedded psi_n times c at size n+1."""
    n = _size_of(len(psi_n))
    big = enumerate_basis(n + 1)
    index = {b: i for i, b in enumerate(big)}
    v = [0] * len(big)
    for a, x in zip(enumerate_basis(n), psi_n):
        v[index[embed(a, 1)]] = x
    return vecmat(v, c_link_total(n + 1, t))


def recurrence_shifted_psi(n: int, m: int, t=1) -> list:
    """Psi_{(alpha)_m} = Psi C^m over alpha in A_n."""
    v = psi_vector(context(n, t))
    c = c_total(n, t)
    for _ in range(m):
        v = vecmat(v, c)
    return v


def _size_of(length: int) -> int:
    n = 1
    while len(enumerate_basis(n)) < length:
        n += 1
    if len(enumerate_basis(n)) != length:
        raise ValueError(f"{length} is not a Catalan number")
    return n


def is_symbolic(t) -> bool:
    return isinstance(t, TPoly)
