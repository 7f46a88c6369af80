"""Brute-force reference implementations and hypothesis strategies.

Nothing here calls the package's solvers; the point is to have a second,
obviously-correct computation to compare against.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from tihany.graph import Graph, make_graph


# criterion number -> (passed, one-line detail); printed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return make_graph(len(index), [(index[u], index[v]) for u, v in h.edges()])


def _adj_sets(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def brute_stable(adj: list[set[int]], vs) -> bool:
    return all(v not in adj[u] for u, v in combinations(vs, 2))


def brute_chi(g: Graph, vertices=None) -> int:
    """Chromatic number by dynamic programming over vertex subsets."""
    vs = sorted(range(g.n) if vertices is None else vertices)
    if not vs:
        return 0
    adj = _adj_sets(g)
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    stable = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        v = vs[low]
        ok = stable[rest]
        if ok:
            ok = not any(rest >> pos[u] & 1 for u in adj[v] if u in pos)
        stable[mask] = ok
    best = [0] + [n + 1] * ((1 << n) - 1)
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask & ~low
        sub = rest
        while True:
            s = sub | low
            if stable[s]:
                best[mask] = min(best[mask], best[mask & ~s] + 1)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return best[(1 << n) - 1]


def brute_omega(g: Graph) -> int:
    adj = _adj_sets(g)
    best = 0
    for r in range(1, g.n + 1):
        if any(all(v in adj[u] for u, v in combinations(c, 2)) for c in combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def brute_alpha(g: Graph) -> int:
    adj = _adj_sets(g)
    best = 0
    for r in range(1, g.n + 1):
        if any(brute_stable(adj, c) for c in combinations(range(g.n), r)):
            best = r
        else:
            break
    return best


def all_matchings(g: Graph) -> list[frozenset[tuple[int, int]]]:
    edges = g.edges()
    out = []

    def rec(i: int, used: set[int], chosen: list[tuple[int, int]]) -> None:
        if i == len(edges):
            out.append(frozenset(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, chosen + [(u, v)])

    rec(0, set(), [])
    return out


def brute_mu(g: Graph) -> int:
    return max(len(m) for m in all_matchings(g))


def brute_mu_dp(g: Graph) -> int:
    """Matching number by exhaustive search over vertex subsets: the lowest
    remaining vertex is either left exposed or paired with a neighbour."""
    adj = _adj_sets(g)

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = best(rest)
        for u in adj[v]:
            if rest >> u & 1:
                out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best((1 << g.n) - 1)


def brute_gallai_edmonds(g: Graph) -> tuple[set[int], set[int], set[int]]:
    ms = all_matchings(g)
    mu = max(len(m) for m in ms)
    d = set()
    for m in ms:
        if len(m) == mu:
            covered = {v for e in m for v in e}
            d |= set(range(g.n)) - covered
    adj = _adj_sets(g)
    a = {u for v in d for u in adj[v]} - d
    c = set(range(g.n)) - d - a
    return d, a, c


def brute_find_claw(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    adj = _adj_sets(g)
    for v in range(g.n):
        for trip in combinations(sorted(adj[v]), 3):
            if brute_stable(adj, trip):
                return v, trip
    return None


def brute_is_clique(g: Graph, vs) -> bool:
    adj = _adj_sets(g)
    return all(v in adj[u] for u, v in combinations(vs, 2))


def brute_cliques(g: Graph, max_size: int) -> list[tuple[int, ...]]:
    out = []
    for r in range(1, max_size + 1):
        out += [c for c in combinations(range(g.n), r) if brute_is_clique(g, c)]
    return out


def brute_is_tihany(g: Graph, k) -> bool:
    rest = [v for v in range(g.n) if v not in set(k)]
    return brute_chi(g, rest) >= brute_chi(g) - len(set(k)) + 1


def brute_antiprismatic(g: Graph) -> bool:
    adj = _adj_sets(g)
    for quad in combinations(range(g.n), 4):
        edges = sum(1 for u, v in combinations(quad, 2) if v in adj[u])
        if edges < 2:
            return False
        for centre in quad:
            leaves = [x for x in quad if x != centre]
            if all(x in adj[centre] for x in leaves) and brute_stable(adj, leaves):
                return False
    return True


def brute_partition(g: Graph, s: int, t: int) -> bool:
    for mask in range(1 << g.n):
        side = [v for v in range(g.n) if mask >> v & 1]
        other = [v for v in range(g.n) if not mask >> v & 1]
        if len(side) >= s and len(other) >= t and brute_chi(g, side) >= s and brute_chi(g, other) >= t:
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = _pairs(n)
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_clique(draw, max_n: int = 8, max_k: int = 3):
    g = draw(graphs(min_n=1, max_n=max_n))
    from tihany.solvers import cliques_up_to

    cliques = list(cliques_up_to(g, max_k))
    k = draw(st.sampled_from(cliques))
    return g, k
