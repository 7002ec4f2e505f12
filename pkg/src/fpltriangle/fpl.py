"""Exhaustive enumeration of fully packed loop configurations.

A ``Region`` is a finite set of lattice vertices, the internal edges between
them and a list of external stubs.  Each stub is attached to one vertex and
is either fixed (occupied / empty) or free.  A configuration chooses a state
for every internal edge and free stub so that each vertex touches exactly two
occupied edges.

The search visits vertices in a fixed order.  Edges towards earlier vertices
are already decided, so at each vertex it only chooses which of its forward
edges to occupy; later vertices are pruned as soon as they would exceed
degree two.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .combinat import Diagram, LinkPattern, enumerate_basis, from_link_pattern


@dataclass
class Stub:
    vertex: tuple[int, int]
    direction: str
    state: bool | None  # None means free
    tag: str = ""


@dataclass
class Region:
    vertices: list[tuple[int, int]]
    edges: list[tuple[tuple[int, int], tuple[int, int]]]
    stubs: list[Stub]
    _order: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._order = {v: k for k, v in enumerate(self.vertices)}


@dataclass(frozen=True)
class FplConfig:
    region: Region
    edges: frozenset  # occupied internal edges
    stubs: tuple[bool, ...]  # state of every stub, region order

    def degree(self, v) -> int:
        d = sum(1 for e in self.edges if v in e)
        return d + sum(1 for s, on in zip(self.region.stubs, self.stubs) if on and s.vertex == v)

    def is_valid(self) -> bool:
        return all(self.degree(v) == 2 for v in self.region.vertices)


def enumerate_configs(region: Region) -> Iterator[FplConfig]:
    verts = region.vertices
    order = region._order
    forward: dict = {v: [] for v in verts}
    for k, (a, b) in enumerate(region.edges):
        first = a if order[a] < order[b] else b
        forward[first].append(("e", k))
    stub_state = [s.state for s in region.stubs]
    fixed_degree = Counter()
    for k, s in enumerate(region.stubs):
        if s.state is None:
            forward[s.vertex].append(("s", k))
        elif s.state:
            fixed_degree[s.vertex] += 1
    degree = {v: fixed_degree[v] for v in verts}
    if any(d > 2 for d in degree.values()):
        return
    edge_on = [False] * len(region.edges)
    other = [None] * len(region.edges)
    for k, (a, b) in enumerate(region.edges):
        other[k] = (a, b)

    def rec(idx):
        if idx == len(verts):
            yield FplConfig(region,
                            frozenset(region.edges[k] for k, on in enumerate(edge_on) if on),
                            tuple(bool(x) for x in stub_state))
            return
        v = verts[idx]
        need = 2 - degree[v]
        opts = forward[v]
        if need < 0 or need > len(opts):
            return
        for choice in combinations(range(len(opts)), need):
            chosen = set(choice)
            touched = []
            ok = True
            for j, (kind, k) in enumerate(opts):
                on = j in chosen
                if kind == "s":
                    stub_state[k] = on
                    continue
                edge_on[k] = on
                if on:
                    a, b = other[k]
                    w = b if a == v else a
                    degree[w] += 1
                    touched.append(w)
                    if degree[w] > 2:
                        ok = False
            if ok:
                degree[v] = 2
                yield from rec(idx + 1)
                degree[v] = 2 - need
            for w in touched:
                degree[w] -= 1
            for kind, k in opts:
                if kind == "s":
                    stub_state[k] = None
                else:
                    edge_on[k] = False

    yield from rec(0)


def trace_paths(config: FplConfig) -> dict[int, int]:
    """Pair up occupied stubs (by index) along open paths; loops are ignored."""
    adj: dict = {}
    for a, b in config.edges:
        adj.setdefault(a, []).append(("v", b))
        adj.setdefault(b, []).append(("v", a))
    for k, (s, on) in enumerate(zip(config.region.stubs, config.stubs)):
        if on:
            adj.setdefault(s.vertex, []).append(("s", k))
    pairs: dict[int, int] = {}
    for k, (s, on) in enumerate(zip(config.region.stubs, config.stubs)):
        if not on or k in pairs:
            continue
        prev = ("s", k)
        cur = s.vertex
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if len(nxt) != 1:
                raise AssertionError(f"vertex {cur} does not have degree two")
            kind, w = nxt[0]
            if kind == "s":
                pairs[k] = w
                pairs[w] = k
                break
            prev, cur = ("v", cur), w
    return pairs


def path_trace(config: FplConfig, labelled: list[int]) -> LinkPattern:
    """Link pattern on the stubs listed in ``labelled`` (which must pair among themselves)."""
    pairs = trace_paths(config)
    pos = {k: p for p, k in enumerate(labelled)}
    partner = []
    for k in labelled:
        j = pairs.get(k)
        if j not in pos:
            raise ValueError(f"stub {k} is connected outside the labelled set")
        partner.append(pos[j])
    return LinkPattern(tuple(partner))


# square grid

def square_region(n: int) -> tuple[Region, list[int]]:
    """n x n grid; stubs counterclockwise from the bottom stub of the bottom-left corner."""
    verts = [(x, y) for y in range(n) for x in range(n)]
    edges = [((x, y), (x + 1, y)) for y in range(n) for x in range(n - 1)]
    edges += [((x, y), (x, y + 1)) for y in range(n - 1) for x in range(n)]
    ring = [((x, 0), "down") for x in range(n)]
    ring += [((n - 1, y), "right") for y in range(n)]
    ring += [((x, n - 1), "up") for x in range(n - 1, -1, -1)]
    ring += [((0, y), "left") for y in range(n - 1, -1, -1)]
    stubs = [Stub(v, d, k % 2 == 0) for k, (v, d) in enumerate(ring)]
    labelled = [k for k in range(len(stubs)) if stubs[k].state]
    return Region(verts, edges, stubs), labelled


def enumerate_fpl_square(n: int) -> dict[Diagram, int]:
    """Counts per link pattern (keyed by its diagram)."""
    region, labelled = square_region(n)
    counts = Counter()
    for cfg in enumerate_configs(region):
        counts[from_link_pattern(path_trace(cfg, labelled))] += 1
    return {d: counts.get(d, 0) for d in enumerate_basis(n)}


# triangle

def triangle_region(n: int) -> tuple[Region, dict]:
    """Triangle of ``2n`` rows with its apex at the top.

    Row ``y`` (``0`` at the base) holds ``x = y .. 4n-2-y``, so the base has
    ``4n-1`` vertices and the apex is the single vertex ``(2n-1, 2n-1)``.
    Every base vertex has a downward stub, occupied iff ``x`` is even (the
    two ends included).  The end vertices of each row carry one free
    horizontal stub pointing out of the triangle; the apex carries both.
    Side positions are numbered from the apex (``0``) down to the base row
    (``2n-1``).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = 2 * n
    right_end = 4 * n - 2
    verts = [(x, y) for y in range(rows) for x in range(y, right_end - y + 1)]
    present = set(verts)
    edges = [((x, y), (x + 1, y)) for (x, y) in verts if (x + 1, y) in present]
    edges += [((x, y), (x, y + 1)) for (x, y) in verts if (x, y + 1) in present]
    stubs: list[Stub] = []
    bottom = []
    for x in range(right_end + 1):
        stubs.append(Stub((x, 0), "down", x % 2 == 0))
        if x % 2 == 0:
            bottom.append(len(stubs) - 1)
    sigma, tau = [], []
    for pos in range(rows):
        y = rows - 1 - pos
        stubs.append(Stub((y, y), "left", None, f"s{pos}"))
        sigma.append(len(stubs) - 1)
        stubs.append(Stub((right_end - y, y), "right", None, f"t{pos}"))
        tau.append(len(stubs) - 1)
    roles = {"bottom": bottom, "sigma": sigma, "tau": tau}
    return Region(verts, edges, stubs), roles


def _is_dyck(ups: list[int], length: int) -> bool:
    height = 0
    marks = set(ups)
    for i in range(length):
        height += 1 if i in marks else -1
        if height < 0:
            return False
    return height == 0


def triangle_boundary(config: FplConfig, roles: dict) -> tuple[Diagram, LinkPattern, Diagram] | None:
    """(sigma, pi, tau) for an admissible configuration, else None.

    Admissible means every occupied side stub is joined to a stub on the
    opposite side; the base stubs then pair among themselves.
    """
    pairs = trace_paths(config)
    left, right = roles["sigma"], roles["tau"]
    lset, rset = set(left), set(right)
    for k in left:
        if config.stubs[k] and pairs[k] not in rset:
            return None
    for k in right:
        if config.stubs[k] and pairs[k] not in lset:
            return None
    n = len(roles["bottom"]) // 2
    sig = [p for p, k in enumerate(left) if config.stubs[k]]
    ta = [p for p, k in enumerate(right) if config.stubs[k]]
    if not (_is_dyck(sig, 2 * n) and _is_dyck(ta, 2 * n)):
        raise AssertionError(f"boundary sequences {sig}, {ta} are not Dyck paths")
    pi = path_trace(config, roles["bottom"])
    return Diagram(tuple(sig)), pi, Diagram(tuple(ta))


def enumerate_fpl_triangle(n: int) -> dict[tuple[Diagram, Diagram, Diagram], int]:
    """a_{sigma,pi,tau} keyed by (sigma, diagram of pi, tau); zero entries omitted."""
    region, roles = triangle_region(n)
    counts = Counter()
    for cfg in enumerate_configs(region):
        key = triangle_boundary(cfg, roles)
        if key is None:
            continue
        sigma, pi, tau = key
        counts[(sigma, from_link_pattern(pi), tau)] += 1
    return dict(counts)


def ascii_dump(config: FplConfig) -> str:
    """Character picture of a configuration: ``o`` vertices, ``-``/``|`` occupied edges, ``*`` occupied stubs."""
    xs = [v[0] for v in config.region.vertices]
    ys = [v[1] for v in config.region.vertices]
    x0, y0 = min(xs) - 1, min(ys) - 1
    w = 2 * (max(xs) - x0 + 1) + 1
    h = 2 * (max(ys) - y0 + 1) + 1
    grid = [[" "] * w for _ in range(h)]

    def put(x2, y2, ch):
        grid[h - 1 - y2][x2] = ch

    for x, y in config.region.vertices:
        put(2 * (x - x0), 2 * (y - y0), "o")
    for (a, b) in config.edges:
        put(a[0] - x0 + b[0] - x0, a[1] - y0 + b[1] - y0, "-" if a[1] == b[1] else "|")
    step = {"left": (-1, 0), "right": (1, 0), "up": (0, 1), "down": (0, -1)}
    for s, on in zip(config.region.stubs, config.stubs):
        if on:
            dx, dy = step[s.direction]
            put(2 * (s.vertex[0] - x0) + dx, 2 * (s.vertex[1] - y0) + dy, "*")
    return "\n".join("".join(r).rstrip() for r in grid)
