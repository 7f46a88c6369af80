"""The strip families Z1-Z5 and composition of strips along a hypergraph."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

from ..graph import Graph, from_mask, is_clique_mask, is_stable_mask, make_graph, to_mask
from .labeled import Labeled, SpecError, labeled_from_names
from .thickening import (
    Pattern,
    ThickeningSpec,
    normalize_pairs,
    random_reduced_pattern,
    thicken,
)
from .threecliqued import line_graph, z2_core


@dataclass(frozen=True)
class Strip:
    labeled: Labeled
    z: tuple[int, ...]

    @property
    def graph(self) -> Graph:
        return self.labeled.graph

    def interior(self) -> frozenset[int]:
        return frozenset(range(self.graph.n)) - frozenset(self.z)

    def attachment(self, end: int) -> frozenset[int]:
        """eta(F, h) for the end vertex ``z[end]``: its neighbourhood."""
        return from_mask(self.graph.rows[self.z[end]])


def _thickened_strip(
    base: Labeled,
    ends: Sequence[str],
    sizes: dict[str, int] | None,
    f: Sequence[Sequence[str]],
    patterns: Sequence[Pattern] | None,
    rng: random.Random | None,
) -> Strip:
    sizes = dict(sizes or {})
    for name in ends:
        if sizes.get(name, 1) != 1:
            raise SpecError("ends", "end cliques must be singletons", name)
    # an F-pair of two singletons cannot be mixed; grow an unsized side
    for p, q in f:
        if sizes.get(p, 1) * sizes.get(q, 1) < 2:
            free = [w for w in (q, p) if w not in sizes and w not in ends]
            if free:
                sizes[free[0]] = 2
    size_list = tuple(sizes.get(name, 1) for name in base.labels)
    pairs = normalize_pairs([base.ids(p) for p in f])
    if patterns is None:
        if rng is None and pairs:
            raise SpecError("patterns", "patterns or a seed are required for F-pairs")
        patterns = [random_reduced_pattern(rng, size_list[u], size_list[v]) for u, v in pairs]
    th = thicken(ThickeningSpec(base.graph, size_list, pairs, tuple(patterns), base.labels))
    z = tuple(th.parts[base.index(name)][0] for name in ends)
    return Strip(th.labeled, z)


def z1_base(reach: Sequence[int]) -> Labeled:
    """Linear interval graph: v_i is adjacent to v_{i+1}, ..., v_{reach[i]}.

    ``reach`` is 1-based and must be nondecreasing with ``reach[i] >= i``.
    """
    n = len(reach)
    if n < 2:
        raise SpecError("Z1", "n must be at least 2")
    for i, r in enumerate(reach, start=1):
        if not i <= r <= n:
            raise SpecError("Z1", "reach must lie between i and n", (i, r))
        if i > 1 and r < reach[i - 2]:
            raise SpecError("Z1", "reach must be nondecreasing", i)
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"v{i}", f"v{j}") for i in range(1, n + 1) for j in range(i + 1, reach[i - 1] + 1)]
    lab = labeled_from_names(names, edges)
    g = lab.graph
    if g.adjacent(0, n - 1):
        raise SpecError("Z1", "v1 and vn must be nonadjacent")
    if g.rows[0] & g.rows[n - 1]:
        raise SpecError("Z1", "no vertex may be adjacent to both v1 and vn")
    return lab


def z1_allowed_pairs(base: Labeled) -> list[tuple[str, str]]:
    """F': adjacent {v_i, v_j}, i < j, v_i != v_1, v_j != v_n, v_i not
    adjacent to v_{j+1} and v_j not adjacent to v_{i-1}.

    Adjacency is required: a fuzzy pair of nonadjacent vertices can create
    a claw.
    """
    g = base.graph
    n = g.n
    out = []
    for i, j in combinations(range(n), 2):
        if i == 0 or j == n - 1 or not g.adjacent(i, j):
            continue
        if j + 1 < n and g.adjacent(i, j + 1):
            continue
        if i - 1 >= 0 and g.adjacent(j, i - 1):
            continue
        out.append((base.labels[i], base.labels[j]))
    return out


def strip_z1(params: dict[str, Any], rng: random.Random | None = None) -> Strip:
    base = z1_base(params["reach"])
    f = [tuple(p) for p in params.get("f", ())]
    allowed = set(z1_allowed_pairs(base))
    for p in f:
        if tuple(p) not in allowed:
            raise SpecError("Z1", "pair outside F'", p)
    n = base.graph.n
    return _thickened_strip(base, ("v1", f"v{n}"), params.get("sizes"), f, params.get("patterns"), rng)


def strip_z2(params: dict[str, Any], rng: random.Random | None = None) -> Strip:
    core = z2_core(int(params["n"]), params.get("x", ()))
    if params.get("f"):
        raise SpecError("Z2", "F is generated empty for this strip family")
    return _thickened_strip(core, ("a0", "b0"), params.get("sizes"), (), (), rng)


Z3_PATH = ("h1", "h2", "h3", "h4", "h5")


def z3_base(extra: Sequence[Sequence[str]] = (), hub_edges: Sequence[Sequence[str]] = ()) -> Labeled:
    """H is the path h1..h5 plus ``extra`` vertices (each listing its hubs
    among h2, h3, h4) and optional ``hub_edges`` among h2, h3, h4; the strip
    base is L(H) with h2h3 and h3h4 made nonadjacent."""
    names = list(Z3_PATH) + [f"w{t + 1}" for t in range(len(extra))]
    edges = [("h1", "h2"), ("h2", "h3"), ("h3", "h4"), ("h4", "h5")]
    hubs = {"h2", "h3", "h4"}
    for p, q in hub_edges:
        if {p, q} - hubs or p == q:
            raise SpecError("Z3", "hub edges join two of h2, h3, h4", (p, q))
        pair = tuple(sorted((p, q)))
        if pair not in [tuple(sorted(e)) for e in edges]:
            edges.append(pair)
    for t, touch in enumerate(extra):
        if not touch or set(touch) - hubs:
            raise SpecError("Z3", "each extra vertex meets some of h2, h3, h4", touch)
        edges += [(h, f"w{t + 1}") for h in sorted(set(touch))]
    h = labeled_from_names(names, edges)
    lg = line_graph(h.graph, h.labels)
    rows = list(lg.graph.rows)
    cut = [lg.index("h2-h3"), lg.index("h3-h4")]
    rows[cut[0]] &= ~(1 << cut[1])
    rows[cut[1]] &= ~(1 << cut[0])
    return Labeled(Graph(len(rows), tuple(rows)), lg.labels)


def strip_z3(params: dict[str, Any], rng: random.Random | None = None) -> Strip:
    base = z3_base(params.get("extra", ()), params.get("hub_edges", ()))
    f = [tuple(p) for p in params.get("f", ())]
    for p in f:
        if set(p) != {"h2-h3", "h3-h4"}:
            raise SpecError("Z3", "F may only hold {h2h3, h3h4}", p)
    return _thickened_strip(base, ("h1-h2", "h4-h5"), params.get("sizes"), f, params.get("patterns"), rng)


def z4_base() -> Labeled:
    names = ["a0", "a1", "a2", "b0", "b1", "b2", "b3", "c1", "c2"]
    edges = []
    for clique in (("a0", "a1", "a2"), ("b0", "b1", "b2", "b3"), ("a2", "c1", "c2"), ("a1", "b1", "c2")):
        edges += list(combinations(clique, 2))
    edges.append(("b2", "c1"))
    return labeled_from_names(names, edges)


Z4_F = (("b2", "c2"), ("b3", "c1"))


def strip_z4(params: dict[str, Any], rng: random.Random | None = None) -> Strip:
    return _thickened_strip(z4_base(), ("a0", "b0"), params.get("sizes"), Z4_F, params.get("patterns"), rng)


def z5_base(removed: Sequence[str] = ()) -> Labeled:
    names = [f"v{i}" for i in range(1, 13)]
    edges = [(f"v{i}", f"v{i % 6 + 1}") for i in range(1, 7)]
    adj = {
        7: (1, 2), 8: (4, 5), 9: (6, 1, 2, 3), 10: (3, 4, 5, 6, 9),
        11: (3, 4, 6, 1, 9, 10), 12: (2, 3, 5, 6, 9, 10),
    }
    for v, nbrs in adj.items():
        edges += [(f"v{v}", f"v{u}") for u in nbrs]
    drop = set(removed)
    if not drop <= {"v11", "v12"}:
        raise SpecError("Z5", "X must lie inside {v11, v12}", sorted(drop))
    keep = [v for v in names if v not in drop]
    return labeled_from_names(keep, [(p, q) for p, q in edges if p not in drop and q not in drop])


def strip_z5(params: dict[str, Any], rng: random.Random | None = None) -> Strip:
    base = z5_base(params.get("x", ()))
    f = [tuple(p) for p in params.get("f", ())]
    for p in f:
        if set(p) != {"v9", "v10"}:
            raise SpecError("Z5", "F may only hold {v9, v10}", p)
    return _thickened_strip(base, ("v7", "v8"), params.get("sizes"), f, params.get("patterns"), rng)


def line_strip() -> Strip:
    """The 3-vertex strip: one interior vertex complete to both ends."""
    lab = labeled_from_names(["z1", "x", "z2"], [("z1", "x"), ("x", "z2")])
    return Strip(lab, (0, 2))


def single_end_strip(graph: Graph, attachment: Sequence[int], labels: Sequence[str] | None = None) -> Strip:
    """A one-ended strip: ``graph`` plus an end vertex complete to ``attachment``."""
    n = graph.n
    edges = list(graph.edges()) + [(v, n) for v in attachment]
    names = tuple(labels or [f"x{v}" for v in range(n)]) + ("z",)
    return Strip(Labeled(make_graph(n + 1, edges), names), (n,))


STRIP_BUILDERS = {1: strip_z1, 2: strip_z2, 3: strip_z3, 4: strip_z4, 5: strip_z5}


def strip_z(k: int, params: dict[str, Any] | None = None, rng: random.Random | None = None) -> Strip:
    if k not in STRIP_BUILDERS:
        raise SpecError("strip", "strip family must be 1..5", k)
    return STRIP_BUILDERS[k](dict(params or {}), rng)


@dataclass(frozen=True)
class HyperEdge:
    ends: tuple[int, ...]
    strip: Strip


@dataclass(frozen=True)
class StripStructureSpec:
    hyper_vertices: int
    hyper_edges: tuple[HyperEdge, ...]


@dataclass(frozen=True)
class Composition:
    labeled: Labeled
    # per hyper-edge: eta(F) and eta(F, h) for each end, in composed ids
    eta: tuple[frozenset[int], ...]
    eta_ends: tuple[dict[int, frozenset[int]], ...]
    # per hyper-edge: composed id of each interior strip vertex
    embed: tuple[dict[int, int], ...] = field(repr=False)

    @property
    def graph(self) -> Graph:
        return self.labeled.graph


def strip_compose(spec: StripStructureSpec) -> Composition:
    if len(spec.hyper_edges) < 2:
        raise SpecError("trivial", "a strip-structure needs at least two hyper-edges")
    names: list[str] = []
    embeds: list[dict[int, int]] = []
    edges: set[tuple[int, int]] = set()
    eta, eta_ends = [], []
    at_vertex: dict[int, set[int]] = {h: set() for h in range(spec.hyper_vertices)}
    for idx, he in enumerate(spec.hyper_edges):
        strip, ends = he.strip, he.ends
        g = strip.graph
        if not 1 <= len(ends) <= 2 or len(set(ends)) != len(ends):
            raise SpecError("hypergraph", "hyper-edges meet one or two distinct hyper-vertices", idx)
        if any(not 0 <= h < spec.hyper_vertices for h in ends):
            raise SpecError("hypergraph", "hyper-vertex out of range", idx)
        if len(strip.z) != len(ends):
            raise SpecError("hypergraph", "strip ends must match the hyper-edge ends", idx)
        zmask = to_mask(strip.z)
        if not is_stable_mask(g, zmask):
            raise SpecError("strip", "end vertices must be pairwise nonadjacent", idx)
        interior = sorted(strip.interior())
        if not interior:
            raise SpecError("SD1", "eta(F) must be nonempty", idx)
        embed = {}
        for v in interior:
            embed[v] = len(names)
            names.append(f"F{idx + 1}:{strip.labeled.labels[v]}")
        for u, v in g.edges():
            if u in embed and v in embed:
                edges.add((embed[u], embed[v]))
        ends_map = {}
        for k, h in enumerate(ends):
            att = strip.attachment(k)
            if not is_clique_mask(g, to_mask(att)):
                raise SpecError("SD2", "an attachment set is not a clique", (idx, h))
            ends_map[h] = frozenset(embed[v] for v in att)
            at_vertex[h] |= ends_map[h]
        embeds.append(embed)
        eta.append(frozenset(embed.values()))
        eta_ends.append(ends_map)
    # SD2: the union of attachments at each hyper-vertex is a clique
    for h, members in at_vertex.items():
        edges.update(combinations(sorted(members), 2))
    g = make_graph(len(names), sorted(edges))
    comp = Composition(Labeled(g, tuple(names)), tuple(eta), tuple(eta_ends), tuple(embeds))
    check_strip_structure(comp)
    return comp


def check_strip_structure(comp: Composition) -> None:
    """Re-check SD1-SD3 on the composed graph."""
    g = comp.graph
    seen = 0
    for idx, part in enumerate(comp.eta):
        mask = to_mask(part)
        if not mask or mask & seen:
            raise SpecError("SD1", "eta sets must be nonempty and disjoint", idx)
        seen |= mask
    if seen != g.full:
        raise SpecError("SD1", "eta sets must cover the vertices")
    hubs: dict[int, int] = {}
    for ends in comp.eta_ends:
        for h, att in ends.items():
            hubs[h] = hubs.get(h, 0) | to_mask(att)
    for h, mask in hubs.items():
        if not is_clique_mask(g, mask):
            raise SpecError("SD2", "attachments at a hyper-vertex do not form a clique", h)
    owner = {}
    for idx, part in enumerate(comp.eta):
        for v in part:
            owner[v] = idx
    for u, v in g.edges():
        i, j = owner[u], owner[v]
        if i == j:
            continue
        shared = set(comp.eta_ends[i]) & set(comp.eta_ends[j])
        if not any(u in comp.eta_ends[i][h] and v in comp.eta_ends[j][h] for h in shared):
            raise SpecError("SD3", "cross edge outside every shared attachment", (u, v))


def rederive_strip(comp: Composition, idx: int, ends: Sequence[int]) -> Graph:
    """The strip at hyper-edge ``idx`` read back from the composed graph, with
    the interior in ``embed`` order followed by one end vertex per end."""
    inside = sorted(comp.embed[idx].items())
    order = [c for _, c in inside]
    pos = {c: k for k, c in enumerate(order)}
    sub_edges = [(pos[u], pos[v]) for u, v in comp.graph.edges() if u in pos and v in pos]
    n = len(order)
    for k, h in enumerate(ends):
        sub_edges += [(pos[c], n + k) for c in comp.eta_ends[idx][h]]
    return make_graph(n + len(ends), sub_edges)


def random_strip(rng: random.Random, k: int) -> Strip:
    """A random member of Z_k with small cliques."""
    if k == 1:
        while True:
            n = rng.randint(3, 6)
            reach = []
            for i in range(1, n + 1):
                low = max(i, reach[-1] if reach else i)
                reach.append(rng.randint(low, min(n, low + 2)))
            try:
                base = z1_base(reach)
            except SpecError:
                continue
            break
        allowed = z1_allowed_pairs(base)
        rng.shuffle(allowed)
        f, used = [], set()
        for p, q in allowed:
            if rng.random() < 0.4 and not {p, q} & used:
                f.append((p, q))
                used |= {p, q}
        sizes = {name: rng.randint(1, 2) for name in base.labels[1:-1]}
        for p, q in f:
            if sizes[p] * sizes[q] < 2:
                sizes[q] = 2
        return strip_z1({"reach": reach, "f": f, "sizes": sizes}, rng)
    if k == 2:
        n = rng.randint(2, 3)
        cs = [f"c{i}" for i in range(1, n + 1)]
        pool = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)] + cs
        x = [v for v in pool if rng.random() < 0.2]
        while n - len([v for v in x if v.startswith("c")]) < 2:
            x.remove(next(v for v in x if v.startswith("c")))
        core = z2_core(n, x)
        sizes = {name: rng.randint(1, 2) for name in core.labels if name not in ("a0", "b0")}
        return strip_z2({"n": n, "x": x, "sizes": sizes}, rng)
    if k == 3:
        extra = [rng.sample(["h2", "h3", "h4"], rng.randint(1, 3)) for _ in range(rng.randint(0, 2))]
        hub_edges = [("h2", "h4")] if rng.random() < 0.5 else []
        base = z3_base(extra, hub_edges)
        f = [("h2-h3", "h3-h4")] if rng.random() < 0.5 else []
        sizes = {name: rng.randint(1, 2) for name in base.labels if name not in ("h1-h2", "h4-h5")}
        if f and sizes["h2-h3"] * sizes["h3-h4"] < 2:
            sizes["h3-h4"] = 2
        return strip_z3({"extra": extra, "hub_edges": hub_edges, "f": f, "sizes": sizes}, rng)
    if k == 4:
        base = z4_base()
        sizes = {name: rng.randint(1, 2) for name in base.labels if name not in ("a0", "b0")}
        for p, q in Z4_F:
            if sizes[p] * sizes[q] < 2:
                sizes[q] = 2
        return strip_z4({"sizes": sizes}, rng)
    if k == 5:
        x = [v for v in ("v11", "v12") if rng.random() < 0.5]
        base = z5_base(x)
        f = [("v9", "v10")] if rng.random() < 0.5 else []
        sizes = {name: rng.randint(1, 2) for name in base.labels if name not in ("v7", "v8")}
        if f and sizes["v9"] * sizes["v10"] < 2:
            sizes["v10"] = 2
        return strip_z5({"x": x, "f": f, "sizes": sizes}, rng)
    raise SpecError("strip", "strip family must be 1..5", k)


def random_composition(rng: random.Random, strips: int = 2, max_vertices: int = 20) -> Composition:
    """Strips from Z1-Z5 (and 3-vertex line strips) hung on a small
    hypergraph; retried until the result fits ``max_vertices``."""
    for _ in range(100):
        hv = rng.randint(2, 3)
        hes = []
        for _ in range(strips):
            kind = rng.choice([0, 1, 2, 3, 4, 5])
            strip = line_strip() if kind == 0 else random_strip(rng, kind)
            ends = tuple(rng.sample(range(hv), 2))
            hes.append(HyperEdge(ends, strip))
        total = sum(len(he.strip.interior()) for he in hes)
        if total <= max_vertices:
            return strip_compose(StripStructureSpec(hv, tuple(hes)))
    raise SpecError("strip", "could not fit a composition under the vertex cap")
