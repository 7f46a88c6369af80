"""Maximum clique / stable set by bitset branch and bound, and clique enumeration."""

from __future__ import annotations

from typing import Iterator

from ..graph import Graph, bits, complement, from_mask


def _color_sort(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand``; returns vertices and their colour numbers
    in non-decreasing colour order (the classic MCQ bound)."""
    order: list[int] = []
    bounds: list[int] = []
    rest = cand
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~rows[v] & ~low
            rest &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique_mask(g: Graph, within: int | None = None) -> int:
    """A maximum clique of ``g|within`` as a bitmask."""
    rows = g.rows
    cand = g.full if within is None else within
    if not cand:
        return 0
    best = [0, cand & -cand]
    best[0] = 1

    def expand(r: int, rsize: int, p: int) -> None:
        order, bounds = _color_sort(rows, p)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= best[0]:
                return
            v = order[i]
            bit = 1 << v
            newp = p & rows[v]
            if newp:
                expand(r | bit, rsize + 1, newp)
            elif rsize + 1 > best[0]:
                best[0] = rsize + 1
                best[1] = r | bit
            p &= ~bit

    expand(0, 0, cand)
    return best[1]


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    mask = max_clique_mask(g)
    return mask.bit_count(), from_mask(mask)


def stability_number(g: Graph) -> tuple[int, frozenset[int]]:
    return clique_number(complement(g))


def cliques_of_size(g: Graph, size: int, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """All cliques with exactly ``size`` vertices, as sorted tuples in
    lexicographic order."""
    rows = g.rows
    cand0 = g.full if within is None else within
    if size == 0:
        yield ()
        return

    def rec(prefix: list[int], cand: int, need: int) -> Iterator[tuple[int, ...]]:
        if need == 0:
            yield tuple(prefix)
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            prefix.append(v)
            yield from rec(prefix, cand & rows[v], need - 1)
            prefix.pop()

    yield from rec([], cand0, size)


def cliques_up_to(g: Graph, max_size: int, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    """Cliques ordered by size, then lexicographically."""
    for s in range(min_size, max_size + 1):
        yield from cliques_of_size(g, s)


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron–Kerbosch with pivoting; used for small structural checks."""
    rows = g.rows
    out: list[frozenset[int]] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(from_mask(r))
            return
        pivot_src = p | x
        pivot = max(bits(pivot_src), key=lambda u: (rows[u] & p).bit_count())
        for v in bits(p & ~rows[pivot]):
            bit = 1 << v
            bk(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if g.n:
        bk(0, g.full, 0)
    return sorted(out, key=lambda c: sorted(c))
