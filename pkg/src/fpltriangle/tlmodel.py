"""Temperley-Lieb(1) loop model on link patterns.

Points are labelled ``0..2n-1``; the generator ``e_i`` (``1 <= i <= 2n``)
acts on points ``i-1`` and ``i mod 2n``.  Matrices are stored as
``M[target][source]`` in the diagram basis order, so ``H psi' = 2n psi'``
is an ordinary right eigenvector equation.
"""
from __future__ import annotations

from functools import lru_cache

from .combinat import LinkPattern, enumerate_basis, from_link_pattern, to_link_pattern
from .linalg import ExactMatrix, primitive_integer_vector


def apply_e(i: int, pi: LinkPattern) -> LinkPattern:
    size = len(pi.partner)
    if not 1 <= i <= size:
        raise ValueError(f"generator index {i} outside 1..{size}")
    a, b = i - 1, i % size
    if pi.partner[a] == b:
        return pi
    partner = list(pi.partner)
    pa, pb = partner[a], partner[b]
    partner[a], partner[b] = b, a
    partner[pa], partner[pb] = pb, pa
    return LinkPattern(tuple(partner))


@lru_cache(maxsize=None)
def e_matrix(n: int, i: int) -> ExactMatrix:
    basis = enumerate_basis(n)
    index = {b: k for k, b in enumerate(basis)}
    rows = [[0] * len(basis) for _ in basis]
    for src, b in enumerate(basis):
        dst = index[from_link_pattern(apply_e(i, to_link_pattern(b)))]
        rows[dst][src] += 1
    return ExactMatrix(rows, [str(b) for b in basis])


@lru_cache(maxsize=None)
def hamiltonian(n: int) -> ExactMatrix:
    h = e_matrix(n, 1)
    for i in range(2, 2 * n + 1):
        h = h + e_matrix(n, i)
    return h


@lru_cache(maxsize=None)
def ground_state(n: int) -> tuple[int, ...]:
    """Positive coprime integer solution of H psi = 2n psi."""
    h = hamiltonian(n)
    shifted = h - ExactMatrix.identity(h.shape[0]) * (2 * n)
    kernel = shifted.nullspace()
    if len(kernel) != 1:
        raise ArithmeticError(f"eigenvalue 2n has multiplicity {len(kernel)} at n={n}")
    vec = primitive_integer_vector(kernel[0])
    if any(v <= 0 for v in vec):
        raise ArithmeticError(f"ground state {vec} is not positive")
    return tuple(vec)
