"""Thickenings: blow each base vertex up into a clique, with mixed patterns on F-pairs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from ..graph import Graph, make_graph
from .labeled import Labeled, SpecError

# (i, j) in a pattern means the i-th vertex of X_u meets the j-th vertex of X_v,
# where (u, v) is the F-pair with u < v.
Pattern = frozenset[tuple[int, int]]


def normalize_pairs(f: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    out = []
    for pair in f:
        u, v = pair
        out.append((min(u, v), max(u, v)))
    return tuple(sorted(set(out)))


@dataclass(frozen=True)
class ThickeningSpec:
    base: Graph
    sizes: tuple[int, ...]
    f: tuple[tuple[int, int], ...] = ()
    patterns: tuple[Pattern, ...] = ()
    base_labels: tuple[str, ...] | None = None

    def pattern_for(self, u: int, v: int) -> Pattern:
        return self.patterns[self.f.index((u, v))]

    def validate(self) -> None:
        n = self.base.n
        if len(self.sizes) != n:
            raise SpecError("sizes", f"expected {n} clique sizes, got {len(self.sizes)}")
        for v, s in enumerate(self.sizes):
            if s < 1:
                raise SpecError("sizes", "every X_v must be nonempty", v)
        seen: set[int] = set()
        for u, v in self.f:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise SpecError("F", "pairs must join two distinct base vertices", (u, v))
            for w in (u, v):
                if w in seen:
                    raise SpecError("F", "a vertex lies in two F-pairs", w)
                seen.add(w)
        if len(self.patterns) != len(self.f):
            raise SpecError("patterns", "one pattern per F-pair is required")
        for (u, v), pattern in zip(self.f, self.patterns):
            su, sv = self.sizes[u], self.sizes[v]
            for i, j in pattern:
                if not (0 <= i < su and 0 <= j < sv):
                    raise SpecError("patterns", "pattern index out of range", (u, v, i, j))
            if not 0 < len(pattern) < su * sv:
                raise SpecError("patterns", "pattern is complete or anticomplete", (u, v))


def is_reduced_pattern(pattern: Iterable[tuple[int, int]]) -> bool:
    """Whether the touched vertices on each side form a complete block."""
    pattern = set(pattern)
    rows = {i for i, _ in pattern}
    cols = {j for _, j in pattern}
    return len(pattern) == len(rows) * len(cols)


def block_pattern(a1: Iterable[int], b1: Iterable[int]) -> Pattern:
    return frozenset((i, j) for i in a1 for j in b1)


def random_reduced_pattern(rng: random.Random, su: int, sv: int) -> Pattern:
    if su * sv < 2:
        raise SpecError("patterns", "two singleton cliques admit no mixed pattern", (su, sv))
    while True:
        a1 = rng.sample(range(su), rng.randint(1, su))
        b1 = rng.sample(range(sv), rng.randint(1, sv))
        if len(a1) < su or len(b1) < sv:
            return block_pattern(a1, b1)


def random_nonreduced_pattern(rng: random.Random, su: int, sv: int) -> Pattern:
    if su < 2 or sv < 2:
        raise SpecError("patterns", "a non-reduced pattern needs two vertices per side", (su, sv))
    cells = [(i, j) for i in range(su) for j in range(sv)]
    while True:
        pattern = frozenset(c for c in cells if rng.random() < 0.5)
        if 0 < len(pattern) < len(cells) and not is_reduced_pattern(pattern):
            return pattern


@dataclass(frozen=True)
class Thickening:
    labeled: Labeled
    origin: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    spec: ThickeningSpec = field(repr=False)

    @property
    def graph(self) -> Graph:
        return self.labeled.graph

    @property
    def f_pairs(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """The W-joins (X_u, X_v) contributed by the F-pairs."""
        return [(self.parts[u], self.parts[v]) for u, v in self.spec.f]


def thicken(spec: ThickeningSpec) -> Thickening:
    spec.validate()
    base = spec.base
    names = spec.base_labels or tuple(f"x{v}" for v in range(base.n))
    parts: list[tuple[int, ...]] = []
    labels: list[str] = []
    origin: list[int] = []
    for v, size in enumerate(spec.sizes):
        start = len(labels)
        parts.append(tuple(range(start, start + size)))
        for t in range(size):
            labels.append(names[v] if size == 1 else f"{names[v]}.{t + 1}")
            origin.append(v)
    edges: list[tuple[int, int]] = []
    for part in parts:
        edges.extend(combinations(part, 2))
    fuzzy = dict(zip(spec.f, spec.patterns))
    for u, v in combinations(range(base.n), 2):
        if (u, v) in fuzzy:
            edges.extend((parts[u][i], parts[v][j]) for i, j in fuzzy[(u, v)])
        elif base.adjacent(u, v):
            edges.extend((x, y) for x in parts[u] for y in parts[v])
    graph = make_graph(len(labels), edges)
    return Thickening(Labeled(graph, tuple(labels)), tuple(origin), tuple(parts), spec)


def random_thickening_spec(
    rng: random.Random,
    base: Graph,
    max_size: int,
    f: Iterable[Sequence[int]] = (),
    base_labels: Sequence[str] | None = None,
    fixed_singletons: Iterable[int] = (),
    reduced: bool = True,
    max_vertices: int | None = None,
) -> ThickeningSpec:
    """Random clique sizes in 1..max_size (F-pair ends made large enough for a
    mixed pattern) and random patterns, reduced unless asked otherwise."""
    pairs = normalize_pairs(f)
    singletons = set(fixed_singletons)
    sizes = [1 if v in singletons else rng.randint(1, max_size) for v in range(base.n)]
    lowest = 1 if reduced else 2
    for u, v in pairs:
        for w in (u, v):
            if w not in singletons:
                sizes[w] = max(sizes[w], lowest)
        if sizes[u] * sizes[v] < 2:
            grow = v if v not in singletons else u
            sizes[grow] = 2
    if max_vertices is not None:
        order = [v for v in range(base.n) if v not in singletons]
        rng.shuffle(order)
        for v in order:
            if sum(sizes) <= max_vertices:
                break
            partner = next((p for p in pairs if v in p), None)
            floor = lowest if partner else 1
            if partner and sizes[partner[0] if partner[1] == v else partner[1]] == 1:
                floor = 2
            sizes[v] = max(floor, sizes[v] - (sum(sizes) - max_vertices))
    make = random_reduced_pattern if reduced else random_nonreduced_pattern
    patterns = tuple(make(rng, sizes[u], sizes[v]) for u, v in pairs)
    return ThickeningSpec(
        base, tuple(sizes), pairs, patterns, tuple(base_labels) if base_labels else None
    )
