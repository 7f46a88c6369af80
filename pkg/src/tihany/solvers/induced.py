"""Induced subgraph search by backtracking with bitset candidate filtering."""

from __future__ import annotations

from ..graph import Graph, bits
from .budget import Budget, Tracker, tracker_for


def _pattern_order(p: Graph) -> list[int]:
    # Descending degree; among equals prefer vertices tied to those already placed.
    order: list[int] = []
    placed = 0
    remaining = set(range(p.n))
    while remaining:
        v = max(
            remaining,
            key=lambda u: (p.degree(u), (p.rows[u] & placed).bit_count(), -u),
        )
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def find_induced(
    g: Graph, pattern: Graph, budget: Budget | Tracker | None = None
) -> dict[int, int] | None:
    """Map pattern vertex -> graph vertex witnessing an induced copy, or None."""
    if pattern.n > g.n:
        return None
    if pattern.n == 0:
        return {}
    tracker = tracker_for(budget)
    order = _pattern_order(pattern)
    gdeg = g.degrees()
    pdeg = pattern.degrees()
    by_degree = [0] * (max(pdeg) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = sum(1 << v for v in range(g.n) if gdeg[v] >= d)
    image = [-1] * pattern.n
    full = g.full

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        tracker.tick()
        x = order[i]
        cand = by_degree[pdeg[x]] & ~used
        for j in range(i):
            y = order[j]
            fy = image[y]
            if pattern.rows[x] >> y & 1:
                cand &= g.rows[fy]
            else:
                cand &= full & ~g.rows[fy] & ~(1 << fy)
            if not cand:
                return False
        for v in bits(cand):
            image[x] = v
            if rec(i + 1, used | (1 << v)):
                return True
        image[x] = -1
        return False

    if rec(0, 0):
        return {x: image[x] for x in range(pattern.n)}
    return None


def is_induced_copy(g: Graph, pattern: Graph, mapping: dict[int, int]) -> bool:
    if len(set(mapping.values())) != pattern.n or len(mapping) != pattern.n:
        return False
    for x in range(pattern.n):
        for y in range(x + 1, pattern.n):
            if pattern.adjacent(x, y) != g.adjacent(mapping[x], mapping[y]):
                return False
    return True


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return find_induced(g, h) is not None
