"""Exact vertex colouring: DSATUR-ordered branch and bound on bitsets.

``find_coloring`` decides k-colourability; ``chromatic_number`` walks k up
from the clique bound until a colouring appears, so every answer below the
returned value has been refuted by an exhausted search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..graph import Graph, bits, to_mask
from .budget import Budget, Tracker, tracker_for
from .cliques import max_clique_mask


@dataclass(frozen=True)
class Coloring:
    classes: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def color_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def is_proper(self, g: Graph, vertices: Iterable[int] | None = None) -> bool:
        want = set(range(g.n)) if vertices is None else set(vertices)
        seen: set[int] = set()
        for cls in self.classes:
            if not cls or seen & cls or not g.is_stable(cls):
                return False
            seen |= cls
        return seen == want

    def to_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]

    @classmethod
    def from_colors(cls, colors: dict[int, int] | list[int]) -> "Coloring":
        items = colors.items() if isinstance(colors, dict) else enumerate(colors)
        groups: dict[int, set[int]] = {}
        for v, c in items:
            groups.setdefault(c, set()).add(v)
        ordered = sorted((frozenset(s) for s in groups.values()), key=min)
        return cls(tuple(ordered))


def greedy_dsatur(g: Graph) -> Coloring:
    """Plain DSATUR heuristic: an upper bound, not an answer."""
    if g.n == 0:
        return Coloring(())
    rows = g.rows
    color = [-1] * g.n
    sat = [0] * g.n
    uncolored = g.full
    while uncolored:
        v = _pick(rows, sat, uncolored)
        c = (~sat[v] & (sat[v] + 1)).bit_length() - 1
        color[v] = c
        uncolored &= ~(1 << v)
        for u in bits(rows[v] & uncolored):
            sat[u] |= 1 << c
    return Coloring.from_colors(color)


def _pick(rows: tuple[int, ...], sat: list[int], uncolored: int) -> int:
    best = -1
    bs = -1
    bd = -1
    for v in bits(uncolored):
        s = sat[v].bit_count()
        if s < bs:
            continue
        d = (rows[v] & uncolored).bit_count()
        if s > bs or d > bd:
            best, bs, bd = v, s, d
    return best


def _search(g: Graph, k: int, tracker: Tracker, seed_clique: int) -> list[int] | None:
    n = g.n
    rows = g.rows
    color = [-1] * n
    sat = [0] * n
    uncolored = g.full
    used = 0
    for c, v in enumerate(bits(seed_clique)):
        if c >= k:
            return None
        color[v] = c
        uncolored &= ~(1 << v)
        for u in bits(rows[v]):
            sat[u] |= 1 << c
        used = c + 1
    limit_all = (1 << k) - 1

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        tracker.tick()
        v = _pick(rows, sat, uncolored)
        open_colors = (1 << min(used + 1, k)) - 1
        avail = open_colors & ~sat[v]
        if not avail:
            return False
        rest = uncolored & ~(1 << v)
        nbrs = rows[v] & rest
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail ^= low
            changed = [u for u in bits(nbrs) if not sat[u] & low]
            dead = False
            for u in changed:
                sat[u] |= low
                if sat[u] == limit_all:
                    dead = True
            color[v] = c
            if not dead and rec(rest, max(used, c + 1)):
                return True
            for u in changed:
                sat[u] &= ~low
        color[v] = -1
        return False

    if rec(uncolored, used):
        return color
    return None


def find_coloring(
    g: Graph,
    k: int,
    budget: Budget | Tracker | None = None,
    clique: Iterable[int] | None = None,
) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or ``None`` when the
    exhaustive search proves there is none.

    Raises ``BudgetExhausted`` if the search is cut off.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if g.n == 0:
        return Coloring(())
    if k == 0:
        return None
    tracker = tracker_for(budget)
    seed = to_mask(clique) if clique is not None else max_clique_mask(g)
    if seed.bit_count() > k:
        return None
    colors = _search(g, k, tracker, seed)
    if colors is None:
        return None
    return Coloring.from_colors(colors)


def chromatic_number(
    g: Graph,
    budget: Budget | Tracker | None = None,
    lower: int = 0,
) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring as witness.

    ``lower`` may carry a bound the caller already knows to hold.
    """
    if g.n == 0:
        return 0, Coloring(())
    tracker = tracker_for(budget)
    clique = max_clique_mask(g)
    upper = greedy_dsatur(g)
    k = max(clique.bit_count(), lower)
    while k < upper.k:
        col = find_coloring(g, k, tracker, clique=bits(clique))
        if col is not None:
            return col.k, col
        k += 1
    return upper.k, upper


def is_colorable(g: Graph, k: int, budget: Budget | Tracker | None = None) -> bool:
    return find_coloring(g, k, budget) is not None
