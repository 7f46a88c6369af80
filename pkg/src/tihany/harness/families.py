"""Seeded instance generators for the sweep, one per graph family.

Every generator is a pure function of ``(family, seed, params)``: the random
stream is ``random.Random(f"{family}:{seed}")``, so any instance can be
rebuilt from its report record.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterator

from ..analysis import is_antiprismatic, triad_masks
from ..constructions import (
    ICOSAHEDRON_F,
    IntervalSpec,
    Labeled,
    SpecError,
    fuzzy_interval_graph,
    hex_chain,
    icosahedron,
    interval_graph,
    line_graph,
    materialize,
    random_chain_spec,
    random_circular_spec,
    random_composition,
    random_thickening_spec,
    thicken,
    triangle_chain,
)
from ..constructions.chains import ChainFailure
from ..constructions.named import (
    mantled_lk33,
    random_mantled_params,
    random_ring_of_five_params,
    ring_of_five,
    rotator,
    twister,
)
from ..constructions.threecliqued import ThreeCliquedGraph, random_tc1_others, tc1, tc3, tc5
from ..graph import Graph, bits, complement, is_connected, make_graph

DEFAULT_MAX_VERTICES = 20
MAX_ATTEMPTS = 200


@dataclass(frozen=True)
class Instance:
    family: str
    seed: int
    labeled: Labeled
    # what the generator decided, kept in the report
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def graph(self) -> Graph:
        return self.labeled.graph

    @property
    def id(self) -> str:
        return f"{self.family}-{self.seed:05d}"


def rng_for(family: str, seed: int) -> random.Random:
    return random.Random(f"{family}:{seed}")


def _cap(params: dict) -> int:
    return int(params.get("max_vertices", DEFAULT_MAX_VERTICES))


def _clique_size(rng: random.Random, params: dict, default: int) -> int:
    # small blow-ups keep chi > omega more often, so vary the cap per draw
    return rng.randint(1, int(params.get("max_size", default)))


def _flip(g: Graph, pairs) -> Graph:
    rows = list(g.rows)
    for u, v in pairs:
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows))


def gen_icosahedron(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    level = int(params["level"]) if "level" in params else rng.choice([0, 1, 2])
    base = icosahedron(level)
    f: list[tuple[int, int]] = []
    if level == 2:
        f = [tuple(base.ids(p)) for p in ICOSAHEDRON_F if rng.random() < 0.5]
    spec = random_thickening_spec(
        rng, base.graph, _clique_size(rng, params, 3), f, base.labels,
        max_vertices=_cap(params),
    )
    detail = {"level": level, "f": [base.names(p) for p in f], "sizes": list(spec.sizes)}
    return thicken(spec).labeled, detail


def gen_circular(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    cap = _cap(params)
    vertices = rng.randint(5, min(12, cap))
    uniform = rng.random() < 0.5
    reach = rng.randint(1, 2 if uniform else 3)
    if uniform and 3 * (reach + 1) >= vertices:
        reach = 1
    raw = random_circular_spec(rng, vertices, reach, uniform=uniform)
    pairs: list[tuple[int, int]] = []
    used: set[int] = set()
    for u, v in raw.outer_endpoint_pairs():
        if u not in used and v not in used and rng.random() < 0.5:
            pairs.append((u, v))
            used |= {u, v}
    spec = IntervalSpec(True, raw.length, raw.points, raw.intervals, tuple(pairs))
    th_spec = random_thickening_spec(
        rng, interval_graph(spec).graph, _clique_size(rng, params, 3), pairs, max_vertices=cap
    )
    detail = {
        "length": spec.length,
        "points": list(spec.points),
        "intervals": [list(iv) for iv in spec.intervals],
        "fuzzy_pairs": [list(p) for p in pairs],
        "sizes": list(th_spec.sizes),
    }
    return fuzzy_interval_graph(spec, th_spec.sizes, th_spec.patterns).labeled, detail


PRISMATIC_SOURCES = ("rotator", "twister", "ring_of_five", "mantled_lk33", "chain_path", "chain_cycle")


def random_prismatic(rng: random.Random, source: str | None = None) -> tuple[Labeled, dict]:
    """A prismatic graph from the named families or the triangle chains."""
    source = source or rng.choice(PRISMATIC_SOURCES)
    if source == "rotator":
        return rotator(), {"source": source}
    if source == "twister":
        return twister(), {"source": source}
    if source == "ring_of_five":
        p = random_ring_of_five_params(rng)
        return ring_of_five(p["sizes"], p["v_adjacency"]), {"source": source, **p}
    if source == "mantled_lk33":
        p = random_mantled_params(rng, max_size=1)
        return mantled_lk33(p["upper"], p["lower"], p["mantle_edges"]), {"source": source, **p}
    cyclic = source == "chain_cycle"
    for _ in range(MAX_ATTEMPTS):
        n = 5 if cyclic else rng.randint(1, 4)
        out = triangle_chain(random_chain_spec(rng, cyclic, n))
        if not isinstance(out, ChainFailure):
            return out.labeled, {"source": source, "chain": out.spec.to_dict()}
    raise SpecError("chain", "no valid triangle chain found")


def changeable_pairs(h: Graph) -> list[tuple[int, int]]:
    """Pairs whose ends lie in no triad, or in exactly one common triad."""
    triads = triad_masks(h)
    count = [0] * h.n
    for t in triads:
        for v in bits(t):
            count[v] += 1
    out = []
    for u, v in combinations(range(h.n), 2):
        if count[u] == 0 and count[v] == 0:
            out.append((u, v))
        elif count[u] == 1 and count[v] == 1:
            pair = (1 << u) | (1 << v)
            if any(t & pair == pair for t in triads):
                out.append((u, v))
    return out


def antiprismatic_pair_ok(h: Graph, f) -> bool:
    f = list(f)
    for r in range(len(f) + 1):
        for sub in combinations(f, r):
            if not is_antiprismatic(_flip(h, sub)).ok:
                return False
    return True


def gen_antiprismatic(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    """Fuzzy antiprismatic: complement of a prismatic graph, thickened over a
    few changeable pairs."""
    cap = _cap(params)
    for _ in range(MAX_ATTEMPTS):
        source, detail = random_prismatic(rng, params.get("source"))
        if source.graph.n <= cap:
            break
    else:
        raise SpecError("size", "no prismatic source fits the vertex cap")
    h = complement(source.graph)
    f: list[tuple[int, int]] = []
    cands = changeable_pairs(h)
    rng.shuffle(cands)
    used: set[int] = set()
    for u, v in cands:
        if len(f) >= 2:
            break
        if u in used or v in used or rng.random() < 0.5:
            continue
        if antiprismatic_pair_ok(h, f + [(u, v)]):
            f.append((u, v))
            used |= {u, v}
    spec = random_thickening_spec(
        rng, h, _clique_size(rng, params, 2), f, source.labels, max_vertices=cap
    )
    detail = {**detail, "f": [source.names(p) for p in f], "sizes": list(spec.sizes)}
    return thicken(spec).labeled, detail


def gen_prismatic(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    return random_prismatic(rng, params.get("source"))


def _random_tc(rng: random.Random) -> tuple[ThreeCliquedGraph, dict]:
    cls = rng.choice([1, 3, 5])
    if cls == 1:
        others = random_tc1_others(rng)
        return tc1(others).tc, {"class": 1, "others": others}
    if cls == 3:
        n = rng.randint(2, 4)
        pool = [f"{g}{i}" for g in "ab" for i in range(1, n + 1)] + [f"c{i}" for i in range(1, n + 1)]
        x = [v for v in pool if rng.random() < 0.15]
        return tc3(n, x).tc, {"class": 3, "n": n, "x": x}
    variant = rng.choice([1, 2])
    pool = [3, 4] if variant == 1 else [3, 4, 5, 6]
    x = [v for v in pool if rng.random() < 0.3]
    arbitrary = (rng.random() < 0.5, rng.random() < 0.5)
    res = tc5(variant, x, arbitrary)
    g, chosen = materialize(res, rng)
    lab = Labeled(g, res.tc.labeled.labels)
    tc = ThreeCliquedGraph(lab, res.tc.a, res.tc.b, res.tc.c)
    detail = {"class": 5, "variant": variant, "x": x, "arbitrary": list(arbitrary),
              "semiadjacent_as_edges": [lab.names(p) for p in chosen]}
    return tc, detail


def gen_three_cliqued(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    """TC1, TC3 and TC5 graphs, and worn hex-chains of up to three of them."""
    cap = _cap(params)
    terms, details = [], []
    for _ in range(rng.choice([1, 1, 2, 3])):
        try:
            tc, d = _random_tc(rng)
        except SpecError:
            continue
        if sum(t.graph.n for t in terms) + tc.graph.n <= cap:
            terms.append(tc.permuted(rng.choice(["ABC", "BCA", "CAB"])))
            details.append(d)
    if not terms:
        raise SpecError("size", "no three-cliqued term fits the vertex cap")
    chain = hex_chain(terms)
    return chain.labeled, {"terms": details}


def gen_strips(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    comp = random_composition(rng, strips=rng.randint(2, 4), max_vertices=_cap(params))
    return comp.labeled, {"strips": len(comp.eta)}


def gen_line_graph(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    cap = _cap(params)
    n = rng.randint(4, 8)
    p = rng.uniform(0.3, 0.7)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    rng.shuffle(edges)
    edges = sorted(edges[:cap])
    h = make_graph(n, edges)
    return line_graph(h, [f"h{v}" for v in range(n)]), {"root_edges": [list(e) for e in edges]}


def gen_random(rng: random.Random, params: dict) -> tuple[Labeled, dict]:
    lo, hi = params.get("n", (5, 12))
    n = rng.randint(int(lo), min(int(hi), _cap(params)))
    p = rng.uniform(0.2, 0.8)
    g = make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
    return Labeled(g, tuple(f"x{v}" for v in range(n))), {"p": round(p, 6)}


Generator = Callable[[random.Random, dict], tuple[Labeled, dict]]

FAMILIES: dict[str, Generator] = {
    "icosahedron": gen_icosahedron,
    "circular": gen_circular,
    "antiprismatic": gen_antiprismatic,
    "prismatic": gen_prismatic,
    "three_cliqued": gen_three_cliqued,
    "strips": gen_strips,
    "line_graph": gen_line_graph,
    "random": gen_random,
}


def generate(family: str, seed: int, params: dict | None = None) -> Instance:
    """The instance for ``(family, seed)``.  Rejected draws are retried on the
    same random stream, so the result is still a function of the seed."""
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; known: {sorted(FAMILIES)}")
    params = dict(params or {})
    rng = rng_for(family, seed)
    cap = _cap(params)
    for _ in range(MAX_ATTEMPTS):
        try:
            labeled, detail = FAMILIES[family](rng, params)
        except SpecError:
            continue
        if labeled.graph.n <= cap:
            return Instance(family, seed, labeled, detail)
    raise SpecError(family, "generator kept failing", seed)


def connected_corpus(max_n: int = 7) -> Iterator[Instance]:
    """All connected graphs on 1..max_n vertices up to isomorphism."""
    if max_n > 7:
        raise ValueError("the bundled atlas stops at 7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    for index, nxg in enumerate(graph_atlas_g()):
        n = nxg.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        g = make_graph(n, list(nxg.edges()))
        if not is_connected(g):
            continue
        yield Instance("atlas", index, Labeled(g, tuple(f"x{v}" for v in range(n))), {})
