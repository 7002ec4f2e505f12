"""Ferrers diagrams inside the staircase, Dyck paths and link patterns.

A diagram of size ``n`` is stored as the strictly increasing sequence
``(a_0, ..., a_{n-1})`` with ``0 <= a_i <= 2i``; ``a_i`` are the positions of
the up-steps of the associated Dyck path of length ``2n``.  The empty diagram
is ``(0, 1, ..., n-1)`` and the staircase is ``(0, 2, ..., 2n-2)``.

Link patterns are noncrossing perfect matchings of the points ``0..2n-1``.
An up-step opens an arch, the matching down-step closes it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True, order=False)
class Diagram:
    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(a) for a in self.seq)
        object.__setattr__(self, "seq", seq)
        if not seq:
            raise ValueError("a diagram needs n >= 1")
        for i, a in enumerate(seq):
            if not 0 <= a <= 2 * i:
                raise ValueError(f"entry {i} of {seq} violates 0 <= a_i <= 2i")
            if i and a <= seq[i - 1]:
                raise ValueError(f"{seq} is not strictly increasing at index {i}")

    @property
    def n(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __getitem__(self, i):
        return self.seq[i]

    def __len__(self):
        return len(self.seq)

    def __str__(self):
        return ",".join(map(str, self.seq))

    def __repr__(self):
        return f"Diagram({self.seq})"

    @property
    def partition(self) -> tuple[int, ...]:
        """Row lengths, largest first, zeros dropped."""
        return seq_to_partition(self.seq)

    @property
    def boxes(self) -> int:
        return boxes(self)

    def sort_key(self):
        return (self.boxes, self.partition)


@dataclass(frozen=True)
class LinkPattern:
    partner: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.partner)
        object.__setattr__(self, "partner", p)
        m = len(p)
        if m == 0 or m % 2:
            raise ValueError(f"link pattern needs an even positive number of points, got {m}")
        for i, j in enumerate(p):
            if not 0 <= j < m or j == i or p[j] != i:
                raise ValueError(f"{p} is not a fixed-point-free involution (point {i})")
        for i, j in self.pairs():
            for k in range(i + 1, j):
                if not i < p[k] < j:
                    raise ValueError(f"{p} has crossing arches ({i},{j}) and ({k},{p[k]})")

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n: int | None = None) -> "LinkPattern":
        pairs = list(pairs)
        size = 2 * len(pairs) if n is None else 2 * n
        partner = [-1] * size
        for a, b in pairs:
            partner[a] = b
            partner[b] = a
        return cls(tuple(partner))

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.partner) if i < j]

    def __str__(self):
        return " ".join(f"{i}-{j}" for i, j in self.pairs())


def seq_to_partition(seq: Sequence[int]) -> tuple[int, ...]:
    n = len(seq)
    parts = [seq[i] - i for i in range(n - 1, -1, -1)]
    return tuple(p for p in parts if p > 0)


def partition_to_seq(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Increasing sequence of a partition with at most ``n`` parts (no staircase check)."""
    parts = [int(p) for p in parts if p]
    if len(parts) > n:
        raise ValueError(f"partition {tuple(parts)} has more than {n} parts")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(p < 0 for p in parts):
        raise ValueError(f"{tuple(parts)} is not a partition")
    padded = parts + [0] * (n - len(parts))
    return tuple(padded[n - 1 - i] + i for i in range(n))


def diagram_from_partition(parts: Sequence[int], n: int) -> Diagram:
    parts = [int(p) for p in parts if p]
    for i, p in enumerate(parts):
        if p > n - 1 - i:
            raise ValueError(f"part {i} (= {p}) exceeds the staircase bound {n - 1 - i}")
    return Diagram(partition_to_seq(parts, n))


def empty(n: int) -> Diagram:
    return Diagram(tuple(range(n)))


def staircase(n: int) -> Diagram:
    return Diagram(tuple(range(0, 2 * n - 1, 2)))


def boxes(alpha) -> int:
    seq = alpha.seq if isinstance(alpha, Diagram) else tuple(alpha)
    return sum(a - i for i, a in enumerate(seq))


def contains(alpha: Diagram, beta: Diagram) -> bool:
    """True iff ``alpha`` is included in ``beta``."""
    if alpha.n != beta.n:
        raise ValueError(f"size mismatch: {alpha.n} vs {beta.n}")
    return all(a <= b for a, b in zip(alpha.seq, beta.seq))


def transpose(alpha: Diagram) -> Diagram:
    n = alpha.n
    mirrored = {2 * n - 1 - a for a in alpha.seq}
    return Diagram(tuple(x for x in range(2 * n) if x not in mirrored))


def dyck_word(alpha: Diagram) -> str:
    ups = set(alpha.seq)
    return "".join("U" if i in ups else "D" for i in range(2 * alpha.n))


def to_link_pattern(alpha: Diagram) -> LinkPattern:
    ups = set(alpha.seq)
    partner = [0] * (2 * alpha.n)
    stack = []
    for i in range(2 * alpha.n):
        if i in ups:
            stack.append(i)
        else:
            j = stack.pop()
            partner[i], partner[j] = j, i
    return LinkPattern(tuple(partner))


def from_link_pattern(pi: LinkPattern) -> Diagram:
    return Diagram(tuple(i for i, j in enumerate(pi.partner) if i < j))


def embed(alpha: Diagram, m: int) -> Diagram:
    if m < 0:
        raise ValueError("m must be non-negative")
    return Diagram(tuple(range(m)) + tuple(m + a for a in alpha.seq))


def rotate(pi: LinkPattern) -> LinkPattern:
    size = len(pi.partner)
    return LinkPattern.from_pairs((((i + 1) % size, (j + 1) % size) for i, j in pi.pairs()), pi.n)


def mirror(pi: LinkPattern) -> LinkPattern:
    last = len(pi.partner) - 1
    return LinkPattern.from_pairs(((last - i, last - j) for i, j in pi.pairs()), pi.n)


def _staircase_partitions(n: int):
    def rec(i, bound):
        if i == n - 1:
            yield ()
            return
        for p in range(min(bound, n - 1 - i), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    yield from rec(0, n - 1)


@lru_cache(maxsize=None)
def enumerate_basis(n: int) -> tuple[Diagram, ...]:
    """All diagrams of ``A_n`` graded by size, ties broken lexicographically on rows."""
    if n < 1:
        raise ValueError("n must be at least 1")
    diagrams = [Diagram(partition_to_seq(p, n)) for p in _staircase_partitions(n)]
    return tuple(sorted(diagrams, key=Diagram.sort_key))


def basis_index(n: int) -> dict[Diagram, int]:
    return {d: i for i, d in enumerate(enumerate_basis(n))}


def check_general_sequence(alpha: Sequence[int]) -> tuple[int, ...]:
    """Validate a sequence with ``a_i <= 2i`` (any sign, any order)."""
    seq = tuple(int(a) for a in alpha)
    for i, a in enumerate(seq):
        if a > 2 * i:
            raise ValueError(f"entry {i} of {seq} exceeds 2i = {2 * i}")
    return seq


def parse_diagram(text: str, n: int | None = None) -> Diagram:
    """Parse ``"0,1,3"`` or a partition ``"p:2,1"`` (the latter needs ``n``)."""
    text = text.strip()
    if text.startswith("p:"):
        if n is None:
            raise ValueError("partition syntax needs n")
        body = text[2:].strip()
        parts = [int(x) for x in body.split(",")] if body else []
        return diagram_from_partition(parts, n)
    seq = tuple(int(x) for x in text.split(","))
    d = Diagram(seq)
    if n is not None and d.n != n:
        raise ValueError(f"diagram {text} has size {d.n}, expected {n}")
    return d


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c
