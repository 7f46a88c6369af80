"""Structural predicates on claw-free, prismatic and antiprismatic graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    bits,
    complement,
    components_mask,
    edges_within,
    from_mask,
    induced_mask,
    is_clique_mask,
    is_connected,
    is_stable_mask,
    to_mask,
)
from .solvers import find_induced
from .solvers.cliques import cliques_up_to


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: frozenset[int]


def find_claw(g: Graph) -> ClawWitness | None:
    rows = g.rows
    for v in range(g.n):
        nbrs = rows[v]
        for a in bits(nbrs):
            rest_a = nbrs & ~rows[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~rows[b] & ~((2 << b) - 1)
                if rest_b:
                    c = (rest_b & -rest_b).bit_length() - 1
                    return ClawWitness(v, frozenset((a, b, c)))
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def triad_masks(g: Graph) -> list[int]:
    rows = g.rows
    out = []
    for a in range(g.n):
        ra = ~rows[a] & g.full & ~((2 << a) - 1)
        for b in bits(ra):
            rb = ra & ~rows[b] & ~((2 << b) - 1)
            for c in bits(rb):
                out.append((1 << a) | (1 << b) | (1 << c))
    return out


def enumerate_triads(g: Graph) -> list[frozenset[int]]:
    return [from_mask(t) for t in triad_masks(g)]


def triangle_masks(g: Graph) -> list[int]:
    rows = g.rows
    out = []
    for a in range(g.n):
        ra = rows[a] & ~((2 << a) - 1)
        for b in bits(ra):
            for c in bits(ra & rows[b] & ~((2 << b) - 1)):
                out.append((1 << a) | (1 << b) | (1 << c))
    return out


@dataclass(frozen=True)
class SetShape:
    is_clique: bool
    is_stable: bool
    is_antimatching: bool
    is_cobipartite: bool


def is_antimatching_mask(g: Graph, mask: int) -> bool:
    return all((mask & ~g.rows[v] & ~(1 << v)).bit_count() <= 1 for v in bits(mask))


def is_cobipartite_mask(g: Graph, mask: int) -> bool:
    """Whether ``mask`` splits into two cliques: 2-colour the complement of ``g|mask``."""
    side: dict[int, int] = {}
    for start in bits(mask):
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(mask & ~g.rows[v] & ~(1 << v)):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def set_shape(g: Graph, s: Iterable[int]) -> SetShape:
    mask = to_mask(s)
    if mask & ~g.full:
        raise GraphError("vertex set leaves the vertex range")
    return SetShape(
        is_clique=is_clique_mask(g, mask),
        is_stable=is_stable_mask(g, mask),
        is_antimatching=is_antimatching_mask(g, mask),
        is_cobipartite=is_cobipartite_mask(g, mask),
    )


@dataclass(frozen=True)
class FourSetVerdict:
    ok: bool
    witness: tuple[int, ...] | None = None
    # "claw" or "sparse" (fewer than two edges), describing the antiprismatic side
    kind: str | None = None


def _four_set_scan(g: Graph) -> FourSetVerdict:
    rows = g.rows
    for quad in combinations(range(g.n), 4):
        mask = to_mask(quad)
        degs = [(rows[v] & mask).bit_count() for v in quad]
        edges = sum(degs) // 2
        if edges < 2:
            return FourSetVerdict(False, quad, "sparse")
        if edges == 3 and sorted(degs) == [1, 1, 1, 3]:
            return FourSetVerdict(False, quad, "claw")
    return FourSetVerdict(True)


def is_antiprismatic(g: Graph, mode: str = "antiprismatic") -> FourSetVerdict:
    """Exhaustive 4-subset test; ``mode="prismatic"`` tests the complement.

    In prismatic mode the witness is reported in terms of the complement
    (a claw there is a triangle plus an isolated vertex in ``g``).
    """
    if mode == "antiprismatic":
        return _four_set_scan(g)
    if mode == "prismatic":
        return _four_set_scan(complement(g))
    raise ValueError(f"unknown mode {mode!r}")


def is_prismatic(g: Graph) -> bool:
    return is_antiprismatic(g, "prismatic").ok


class NotPrismatic(ValueError):
    pass


@dataclass(frozen=True)
class OrientabilityVerdict:
    orientable: bool
    pattern: str | None = None
    embedding: dict[int, int] | None = None


def is_orientable_prismatic(g: Graph) -> OrientabilityVerdict:
    from .constructions.named import rotator, twister

    verdict = is_antiprismatic(g, "prismatic")
    if not verdict.ok:
        raise NotPrismatic(f"graph is not prismatic (4-set {verdict.witness})")
    for name, build in (("rotator", rotator), ("twister", twister)):
        pattern = build().graph
        hit = find_induced(g, pattern)
        if hit is not None:
            return OrientabilityVerdict(False, name, hit)
    return OrientabilityVerdict(True)


MAX_SUBSTANTIAL_K = 4


@dataclass(frozen=True)
class SubstantialVerdict:
    ok: bool
    violating: frozenset[int] | None = None


def is_k_substantial(g: Graph, k: int) -> SubstantialVerdict:
    """Every vertex set of size < k misses some triad."""
    if not 1 <= k <= MAX_SUBSTANTIAL_K:
        raise ValueError(f"k must lie in 1..{MAX_SUBSTANTIAL_K}")
    triads = triad_masks(g)
    for size in range(k):
        for s in combinations(range(g.n), size):
            smask = to_mask(s)
            if not any(not (t & smask) for t in triads):
                return SubstantialVerdict(False, frozenset(s))
    return SubstantialVerdict(True)


@dataclass(frozen=True)
class CoreReport:
    core: frozenset[int]
    strong_core: frozenset[int]
    weak: frozenset[int]
    triangles: tuple[frozenset[int], ...]
    # vertices lying in exactly one triangle (the looser reading of "weak")
    single_triangle: frozenset[int]


def core_strong_core(g: Graph) -> CoreReport:
    tris = triangle_masks(g)
    count = [0] * g.n
    for t in tris:
        for v in bits(t):
            count[v] += 1
    weak = 0
    for t in tris:
        members = list(bits(t))
        for b in members:
            if count[b] != 1:
                continue
            if any(count[c] == 1 for c in members if c != b):
                weak |= 1 << b
    core = 0
    for t in tris:
        core |= t
    single = to_mask(v for v in range(g.n) if count[v] == 1)
    return CoreReport(
        core=from_mask(core),
        strong_core=from_mask(core & ~weak),
        weak=from_mask(weak),
        triangles=tuple(from_mask(t) for t in tris),
        single_triangle=from_mask(single),
    )


def _neighborhood(g: Graph, mask: int) -> int:
    acc = 0
    for v in bits(mask):
        acc |= g.rows[v]
    return acc & ~mask


def minimal_separators(g: Graph) -> list[int]:
    """All minimal separators (as masks) of a connected graph, by closing
    the seeds ``N(C)`` for components ``C`` of ``G - N[v]`` under ``S + N(x)``."""
    found: set[int] = set()
    queue: list[int] = []

    def add_from(removed: int) -> None:
        for comp in components_mask(g, g.full & ~removed):
            sep = _neighborhood(g, comp)
            if sep and sep not in found:
                found.add(sep)
                queue.append(sep)

    for v in range(g.n):
        add_from(g.rows[v] | (1 << v))
    while queue:
        sep = queue.pop()
        for x in bits(sep):
            add_from(sep | g.rows[x])
    return sorted(found, key=lambda s: (s.bit_count(), sorted(bits(s))))


@dataclass(frozen=True)
class CliqueCutset:
    k: frozenset[int]
    a: frozenset[int]
    b: frozenset[int]


MINIMAL_SEPARATOR_LIMIT = 64
FALLBACK_CLIQUE_SIZE = 5


def _split(g: Graph, kmask: int) -> CliqueCutset | None:
    comps = components_mask(g, g.full & ~kmask)
    if len(comps) < 2:
        return None
    a = comps[0]
    b = 0
    for c in comps[1:]:
        b |= c
    return CliqueCutset(from_mask(kmask), from_mask(a), from_mask(b))


def find_clique_cutset(g: Graph) -> CliqueCutset | None:
    """A clique whose removal disconnects ``g``, with one side ``a`` (the
    component holding the lowest remaining vertex) and the rest as ``b``."""
    if not is_connected(g):
        raise GraphError("clique cutsets are only searched in connected graphs")
    if g.n <= MINIMAL_SEPARATOR_LIMIT:
        for sep in minimal_separators(g):
            if is_clique_mask(g, sep):
                return _split(g, sep)
        return None
    for clique in cliques_up_to(g, FALLBACK_CLIQUE_SIZE):
        hit = _split(g, to_mask(clique))
        if hit is not None:
            return hit
    return None


def closed_neighborhood_mask(g: Graph, kmask: int) -> int:
    acc = g.full
    for v in bits(kmask):
        acc &= g.rows[v]
    return (acc & ~kmask) | kmask


def alpha_at_most_two(g: Graph, mask: int) -> bool:
    """No triad inside ``mask``."""
    sub, _ = induced_mask(g, mask)
    return not triad_masks(sub)


__all__ = [
    "ClawWitness",
    "CliqueCutset",
    "CoreReport",
    "FourSetVerdict",
    "NotPrismatic",
    "OrientabilityVerdict",
    "SetShape",
    "SubstantialVerdict",
    "core_strong_core",
    "edges_within",
    "enumerate_triads",
    "find_claw",
    "find_clique_cutset",
    "is_antiprismatic",
    "is_claw_free",
    "is_k_substantial",
    "is_orientable_prismatic",
    "is_prismatic",
    "minimal_separators",
    "set_shape",
    "triad_masks",
    "triangle_masks",
]
