"""Immutable simple graphs on dense integer vertex ids.

Adjacency is kept as one bitmask per vertex (``rows[v]`` has bit ``u`` set
iff ``uv`` is an edge).  Vertex sets cross the public API as ``frozenset``;
the ``*_mask`` helpers are for the solvers, which work on bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset

MAX_VERTICES = 512


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return is_clique_mask(self, to_mask(vertices))

    def is_stable(self, vertices: Iterable[int]) -> bool:
        return is_stable_mask(self, to_mask(vertices))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges are merged."""
    if n < 0:
        raise GraphError("negative vertex count")
    if n > MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices are supported")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    """Build from bitmask rows, checking symmetry and irreflexivity."""
    n = len(rows)
    full = (1 << n) - 1
    for v, r in enumerate(rows):
        if r & ~full:
            raise GraphError("row refers to a vertex outside the graph")
        if r >> v & 1:
            raise GraphError(f"self-loop at {v}")
        for u in bits(r):
            if not rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    keep = list(bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(to_mask(index[u] for u in bits(g.rows[v] & mask)))
    return Graph(len(keep), tuple(rows)), keep


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g|s`` and the remap table: new id ``i`` is old id ``table[i]``."""
    mask = to_mask(s)
    if mask & ~g.full:
        raise GraphError("vertex set leaves the vertex range")
    return induced_mask(g, mask)


def delete(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """``g \\ s`` with its remap table."""
    return induced_mask(g, g.full & ~to_mask(s))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return make_graph(offset, edges)


def is_clique_mask(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if (mask & ~(1 << v)) & ~g.rows[v]:
            return False
    return True


def is_stable_mask(g: Graph, mask: int) -> bool:
    return all(not (g.rows[v] & mask) for v in bits(mask))


def common_neighbors_mask(g: Graph, mask: int) -> int:
    """C(K) as a mask; the empty clique gives every vertex."""
    acc = g.full
    for v in bits(mask):
        acc &= g.rows[v]
    return acc & ~mask


def components_mask(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g|within`` as masks, ordered by lowest vertex."""
    rest = g.full if within is None else within
    comps = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.rows[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components_mask(g)) == 1


def edges_within(g: Graph, mask: int) -> int:
    return sum((g.rows[v] & mask).bit_count() for v in bits(mask)) // 2


@dataclass(frozen=True)
class CliquePartition:
    """Vertices outside a clique K split by their adjacency to K."""

    c: frozenset[int]
    a: frozenset[int]
    m: frozenset[int]

    def closed(self, k: Iterable[int]) -> frozenset[int]:
        return self.c | frozenset(k)


def partition_wrt_clique(g: Graph, k: Iterable[int]) -> CliquePartition:
    kmask = to_mask(k)
    if kmask & ~g.full:
        raise GraphError("clique leaves the vertex range")
    if not is_clique_mask(g, kmask):
        raise GraphError("K is not a clique")
    c = common_neighbors_mask(g, kmask)
    touched = 0
    for v in bits(kmask):
        touched |= g.rows[v]
    # with K empty every vertex is a common neighbour, so none is left for A
    a = g.full & ~touched & ~kmask & ~c
    m = g.full & ~(c | a | kmask)
    return CliquePartition(from_mask(c), from_mask(a), from_mask(m))


# Small standard graphs used throughout the tests and the harness.

def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return make_graph(n)


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel_graph(rim: int) -> Graph:
    """Hub ``0`` joined to the cycle ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return make_graph(rim + 1, edges)


def complete_bipartite(p: int, q: int) -> Graph:
    return make_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)
