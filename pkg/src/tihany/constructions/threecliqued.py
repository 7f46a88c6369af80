"""Line graphs, three-cliqued graphs, worn hex-chains and the TC1-TC5 classes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..analysis import find_claw, is_antiprismatic, triad_masks
from ..graph import Graph, bits, from_mask, is_clique_mask, make_graph, to_mask
from .intervals import IntervalSpec, interval_graph
from .labeled import Labeled, SpecError, labeled_from_names


def line_graph(h: Graph, labels: Sequence[str] | None = None) -> Labeled:
    """Vertices are the edges of ``h`` (named ``u-v``), adjacent when they share an end."""
    names = labels or [str(v) for v in range(h.n)]
    edges = list(h.edges())
    out = []
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            out.append((i, j))
    lab = tuple(f"{names[u]}-{names[v]}" for u, v in edges)
    return Labeled(make_graph(len(edges), out), lab)


@dataclass(frozen=True)
class ThreeCliquedGraph:
    labeled: Labeled
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]

    @property
    def graph(self) -> Graph:
        return self.labeled.graph

    def validate(self) -> None:
        g = self.graph
        parts = (self.a, self.b, self.c)
        if (self.a & self.b) or (self.a & self.c) or (self.b & self.c):
            raise SpecError("three-cliqued", "A, B, C overlap")
        if self.a | self.b | self.c != frozenset(range(g.n)):
            raise SpecError("three-cliqued", "A, B, C do not cover the vertices")
        for name, part in zip("ABC", parts):
            if not is_clique_mask(g, to_mask(part)):
                raise SpecError("three-cliqued", f"{name} is not a clique", sorted(part))

    def permuted(self, order: str) -> "ThreeCliquedGraph":
        """Reorder the cliques, e.g. ``"BCA"``."""
        if sorted(order) != ["A", "B", "C"]:
            raise SpecError("permutation", "order must rearrange A, B, C", order)
        pick = {"A": self.a, "B": self.b, "C": self.c}
        return ThreeCliquedGraph(self.labeled, *(pick[k] for k in order))

    def vertices_in_triads(self, f: Iterable[tuple[int, int]] = ()) -> frozenset[int]:
        """Vertices lying in some triad; pairs in ``f`` count as nonadjacent."""
        g = self.graph
        rows = list(g.rows)
        for u, v in f:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        loose = Graph(g.n, tuple(rows))
        acc = 0
        for t in triad_masks(loose):
            acc |= t
        return from_mask(acc)


def hex_chain(
    terms: Sequence[ThreeCliquedGraph], wear: Iterable[tuple[int, int]] = ()
) -> ThreeCliquedGraph:
    """Compose terms in order; ``wear`` lists extra edges (global ids after
    concatenation) between A_i-B_j, B_i-C_j or C_i-A_j with i < j, allowed
    only between vertices lying in no triad."""
    if not terms:
        raise SpecError("hex-chain", "at least one term is required")
    offsets = []
    total = 0
    names: list[str] = []
    for k, t in enumerate(terms):
        t.validate()
        offsets.append(total)
        total += t.graph.n
        names += [f"{k + 1}:{name}" for name in t.labeled.labels]
    edges = set()
    term_of = [0] * total
    role = [""] * total
    in_triad = set()
    for k, t in enumerate(terms):
        off = offsets[k]
        for u, v in t.graph.edges():
            edges.add((u + off, v + off))
        for key, part in (("A", t.a), ("B", t.b), ("C", t.c)):
            for v in part:
                role[v + off] = key
                term_of[v + off] = k
        for tri in triad_masks(t.graph):
            in_triad.update(v + off for v in bits(tri))
    skip = {"A": "B", "B": "C", "C": "A"}
    for u in range(total):
        for v in range(u + 1, total):
            if term_of[u] == term_of[v]:
                continue
            if role[v] != skip[role[u]]:
                edges.add((u, v))
    worn = {"A": "B", "B": "C", "C": "A"}
    for u, v in wear:
        u, v = min(u, v), max(u, v)
        if not (0 <= u < total and 0 <= v < total) or term_of[u] == term_of[v]:
            raise SpecError("wear", "wear joins vertices of two different terms", (u, v))
        if worn[role[u]] != role[v]:
            raise SpecError("wear", "wear only applies to A_i-B_j, B_i-C_j, C_i-A_j pairs", (u, v))
        if u in in_triad or v in in_triad:
            raise SpecError("wear", "wear touches a vertex in a triad", (u, v))
        edges.add((u, v))
    g = make_graph(total, sorted(edges))
    pick = lambda key: frozenset(v for v in range(total) if role[v] == key)  # noqa: E731
    out = ThreeCliquedGraph(Labeled(g, tuple(names)), pick("A"), pick("B"), pick("C"))
    out.validate()
    return out


def chain_triads_preserved(chain: ThreeCliquedGraph, terms: Sequence[ThreeCliquedGraph]) -> bool:
    """Every triad of the chain is a triad of one term."""
    offsets = [0]
    for t in terms:
        offsets.append(offsets[-1] + t.graph.n)
    for tri in triad_masks(chain.graph):
        vs = list(bits(tri))
        k = next(i for i in range(len(terms)) if offsets[i] <= vs[0] < offsets[i + 1])
        if not all(offsets[k] <= v < offsets[k + 1] for v in vs):
            return False
    return True


@dataclass(frozen=True)
class TCResult:
    tc: ThreeCliquedGraph
    # semiadjacent pairs, given as F for a thickening
    f: tuple[tuple[int, int], ...] = ()
    cls: int = 0


def _require_triads(tc: ThreeCliquedGraph, f=()) -> None:
    covered = tc.vertices_in_triads(f)
    missing = sorted(set(range(tc.graph.n)) - covered)
    if missing:
        raise SpecError("triads", "every vertex must lie in a triad", tc.labeled.names(missing))


def tc1(others: Sequence[Sequence[int]]) -> TCResult:
    """H has hubs v1, v2, v3 and one further vertex per entry of ``others``,
    adjacent to the listed hubs (1, 2, 3)."""
    m = len(others)
    names = ["v1", "v2", "v3"] + [f"w{t + 1}" for t in range(m)]
    edges = []
    for t, hubs in enumerate(others):
        if not hubs or any(h not in (1, 2, 3) for h in hubs):
            raise SpecError("TC1", "each further vertex meets a nonempty set of hubs", hubs)
        edges += [(f"v{h}", f"w{t + 1}") for h in sorted(set(hubs))]
    h = labeled_from_names(names, edges)
    for i in (1, 2, 3):
        if h.graph.degree(i - 1) < 3:
            raise SpecError("TC1", "hubs need degree at least three", f"v{i}")
    for i, j in ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)):
        lonely = [t for t, hubs in enumerate(others) if i in hubs and j not in hubs]
        if len(lonely) > 1:
            raise SpecError("TC1", f"two vertices meet v{i} but not v{j}", lonely)
    lg = line_graph(h.graph, h.labels)
    sets = []
    for hub in ("v1", "v2", "v3"):
        sets.append(frozenset(k for k, name in enumerate(lg.labels) if hub in name.split("-")))
    tc = ThreeCliquedGraph(lg, *sets)
    tc.validate()
    _require_triads(tc)
    return TCResult(tc, (), 1)


def tc2(spec: IntervalSpec, lines: Sequence[Sequence[int]]) -> TCResult:
    """Circular interval graph with three disjoint lines covering the vertices.

    A line is a set of at most one vertex, or the vertices on a sub-arc of one
    interval whose two ends are vertices.
    """
    lab = interval_graph(spec)
    if len(lines) != 3:
        raise SpecError("TC2", "exactly three lines are required")
    for line in lines:
        if len(line) <= 1:
            continue
        if not any(_is_subarc(spec, iv, line) for iv in spec.intervals):
            raise SpecError("TC2", "a line must be a sub-arc of one interval", sorted(line))
    tc = ThreeCliquedGraph(lab, *(frozenset(line) for line in lines))
    tc.validate()
    _require_triads(tc)
    return TCResult(tc, (), 2)


def _is_subarc(spec: IntervalSpec, interval: tuple[int, int], line: Sequence[int]) -> bool:
    s, e = interval
    span = (e - s) % spec.length if spec.circular else e - s
    pos = spec.points
    for a in line:
        for b in line:
            if a == b:
                continue
            oa, ob = (pos[a] - s) % spec.length, (pos[b] - s) % spec.length
            if not spec.circular:
                oa, ob = pos[a] - s, pos[b] - s
            if 0 <= oa <= ob <= span and set(spec.members((pos[a], pos[b]))) == set(line):
                return True
    return False


def z2_core(n: int, removed: Iterable[str] = ()) -> Labeled:
    """The base graph of the Z2 strip, minus the named vertices."""
    if n < 2:
        raise SpecError("Z2", "n must be at least 2", n)
    names = [f"a{i}" for i in range(n + 1)] + [f"b{i}" for i in range(n + 1)]
    names += [f"c{i}" for i in range(1, n + 1)]
    edges = []
    for group in ("a", "b"):
        edges += [(f"{group}{i}", f"{group}{j}") for i, j in combinations(range(n + 1), 2)]
    edges += [(f"c{i}", f"c{j}") for i, j in combinations(range(1, n + 1), 2)]
    edges += [(f"a{i}", f"b{i}") for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                edges += [(f"c{i}", f"a{j}"), (f"c{i}", f"b{j}")]
    drop = set(removed)
    unknown = drop - set(names)
    if unknown:
        raise SpecError("Z2", "unknown vertex in X", sorted(unknown))
    if drop & {"a0", "b0"}:
        raise SpecError("Z2", "X may not contain a0 or b0")
    if n - len([c for c in drop if c.startswith("c")]) < 2:
        raise SpecError("Z2", "|C \\ X| >= 2 is required")
    keep = [v for v in names if v not in drop]
    return labeled_from_names(keep, [(p, q) for p, q in edges if p not in drop and q not in drop])


def tc3(n: int, removed: Iterable[str] = ()) -> TCResult:
    core = z2_core(n, removed)
    groups = [frozenset(k for k, name in enumerate(core.labels) if name[0] == g) for g in "abc"]
    tc = ThreeCliquedGraph(core, *groups)
    tc.validate()
    _require_triads(tc)
    return TCResult(tc, (), 3)


def tc4(g: Graph, a: Iterable[int], b: Iterable[int], c: Iterable[int],
        labels: Sequence[str] | None = None) -> TCResult:
    verdict = is_antiprismatic(g)
    if not verdict.ok:
        raise SpecError("TC4", "graph is not antiprismatic", verdict.witness)
    lab = Labeled(g, tuple(labels) if labels else tuple(f"x{v}" for v in range(g.n)))
    tc = ThreeCliquedGraph(lab, frozenset(a), frozenset(b), frozenset(c))
    tc.validate()
    return TCResult(tc, (), 4)


def tc5(variant: int, removed: Iterable[int] = (), arbitrary: Sequence[bool] = (False, False)) -> TCResult:
    """The two sporadic three-cliqued classes.  ``removed`` holds indices of
    v_i to delete (X); ``arbitrary`` gives the adjacency of v2v4 and v5v7 in
    the second variant.  Semiadjacent pairs come back as ``f`` with both
    ends left nonadjacent in the returned graph."""
    drop = set(removed)
    if variant == 1:
        if not drop <= {3, 4}:
            raise SpecError("TC5", "X must lie inside {v3, v4}", sorted(drop))
        verts = list(range(1, 9))
        edges = [(i, j) for i, j in combinations(range(1, 7), 2) if j - i <= 2]
        edges += [(1, 6), (1, 7), (6, 7), (7, 8)]
        semi = [(1, 4), (3, 6)]
        parts = ({1, 2, 3}, {4, 5, 6}, {7, 8})
    elif variant == 2:
        if not drop <= {3, 4, 5, 6}:
            raise SpecError("TC5", "X must lie inside {v3, v4, v5, v6}", sorted(drop))
        verts = list(range(1, 10))
        a, b, c = {1, 2}, {3, 4, 5, 6, 9}, {7, 8}
        edges = []
        for part in (a, b, c):
            edges += list(combinations(sorted(part), 2))
        edges += [(8, 9), (1, 9), (1, 8), (2, 3), (6, 7)]
        v24, v57 = arbitrary
        if v24:
            edges.append((2, 4))
        if v57:
            edges.append((5, 7))
        semi = [(1, 3), (6, 8)]
        parts = (a, b, c)
        left = {3, 4} - drop
        if not (left and (v24 and 4 in left or 3 in left)):
            raise SpecError("TC5", "v2 is strongly anticomplete to {v3, v4} minus X")
        right = {5, 6} - drop
        if not (right and (v57 and 5 in right or 6 in right)):
            raise SpecError("TC5", "v7 is strongly anticomplete to {v5, v6} minus X")
        if 4 not in drop and 5 not in drop and not (v24 and v57):
            raise SpecError("TC5", "with v4, v5 kept, v2v4 and v5v7 must be edges")
    else:
        raise SpecError("TC5", "variant must be 1 or 2", variant)
    keep = [v for v in verts if v not in drop]
    names = [f"v{v}" for v in keep]
    lab = labeled_from_names(
        names, [(f"v{p}", f"v{q}") for p, q in edges if p not in drop and q not in drop]
    )
    index = {v: k for k, v in enumerate(keep)}
    f = tuple((index[p], index[q]) for p, q in semi if p not in drop and q not in drop)
    sets = [frozenset(index[v] for v in part if v not in drop) for part in parts]
    tc = ThreeCliquedGraph(lab, *sets)
    tc.validate()
    _require_triads(tc, f)
    return TCResult(tc, f, 5)


def tc_generator(cls: int, params: dict | None = None) -> TCResult:
    """Dispatch to the TC builders from plain (JSON-friendly) parameters."""
    p = dict(params or {})
    if cls == 1:
        return tc1(p["others"])
    if cls == 2:
        iv = p["interval"]
        spec = IntervalSpec(True, iv["length"], tuple(iv["points"]),
                            tuple(tuple(x) for x in iv["intervals"]))
        return tc2(spec, p["lines"])
    if cls == 3:
        return tc3(int(p["n"]), p.get("x", ()))
    if cls == 4:
        g = make_graph(int(p["n"]), [tuple(e) for e in p["edges"]])
        return tc4(g, p["a"], p["b"], p["c"], p.get("labels"))
    if cls == 5:
        return tc5(int(p["variant"]), p.get("x", ()), tuple(p.get("arbitrary", (False, False))))
    raise SpecError("class", "three-cliqued class must be 1..5", cls)


def materialize(result: TCResult, rng: random.Random) -> tuple[Graph, list[tuple[int, int]]]:
    """Decide each semiadjacent pair by coin flip; returns the graph and the
    pairs turned into edges."""
    rows = list(result.tc.graph.rows)
    chosen = []
    for u, v in result.f:
        if rng.random() < 0.5:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            chosen.append((u, v))
    return Graph(len(rows), tuple(rows)), chosen


def random_tc1_others(rng: random.Random) -> list[list[int]]:
    """Further vertices for TC1: mostly full triples, plus at most one vertex
    of each partial type so the 'meets v_i but not v_j' bound holds."""
    others = [[1, 2, 3] for _ in range(rng.randint(1, 3))]
    partial = [[1, 2], [1, 3], [2, 3], [1], [2], [3]]
    rng.shuffle(partial)
    for hubs in partial:
        trial = others + [hubs]
        try:
            tc1(trial)
        except SpecError:
            continue
        if rng.random() < 0.5:
            others = trial
    while True:
        try:
            tc1(others)
            return others
        except SpecError:
            others.append([1, 2, 3])


def claw_free_check(g: Graph) -> bool:
    return find_claw(g) is None
