"""Fixed and parametrised named graphs: icosahedra, rotator, twister,
L(K3,3), ring of five and mantled L(K3,3)."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Any, Sequence

from ..graph import bits, delete
from .labeled import Labeled, SpecError, labeled_from_names


def icosahedron(level: int = 0) -> Labeled:
    """G0 (level 0), G1 = G0 - v11 (level 1), G2 = G1 - v10 (level 2)."""
    if level not in (0, 1, 2):
        raise SpecError("level", "icosahedron level must be 0, 1 or 2", level)
    names = [f"v{i}" for i in range(12)]
    edges = []
    for i in range(1, 11):
        for step in (1, 2):
            j = (i - 1 + step) % 10 + 1
            edges.append((f"v{i}", f"v{j}"))
    edges += [("v0", f"v{i}") for i in (1, 3, 5, 7, 9)]
    edges += [("v11", f"v{i}") for i in (2, 4, 6, 8, 10)]
    full = labeled_from_names(names, edges)
    drop = {0: [], 1: [11], 2: [11, 10]}[level]
    g, table = delete(full.graph, drop)
    return Labeled(g, tuple(full.labels[v] for v in table))


# The changeable pairs allowed on G2.
ICOSAHEDRON_F = (("v1", "v4"), ("v6", "v9"))


def rotator() -> Labeled:
    names = [f"v{i}" for i in range(1, 10)]
    edges = [("v1", "v2"), ("v1", "v3"), ("v2", "v3")]
    edges += [(f"v{i}", f"v{j}") for i in (4, 5, 6) for j in (7, 8, 9)]
    for i in (1, 2, 3):
        edges += [(f"v{i}", f"v{i + 3}"), (f"v{i}", f"v{i + 6}")]
    return labeled_from_names(names, edges)


def twister() -> Labeled:
    names = ["u1", "u2"] + [f"v{i}" for i in range(1, 9)]

    def v(i: int) -> str:
        return f"v{(i - 1) % 8 + 1}"

    edges = {("u1", "u2")}
    for i in range(1, 9):
        for j in (i - 1, i + 1, i + 4):
            edges.add(tuple(sorted((v(i), v(j)))))
    for k in (1, 2):
        for step in (0, 2, 4, 6):
            edges.add((f"u{k}", v(k + step)))
    return labeled_from_names(names, sorted(edges))


def _lk33_names() -> list[str]:
    return [f"a{i}^{j}" for i in (1, 2, 3) for j in (1, 2, 3)]


def _lk33_edges() -> list[tuple[str, str]]:
    out = []
    for (i, j), (k, l) in combinations([(i, j) for i in (1, 2, 3) for j in (1, 2, 3)], 2):
        if i != k and j != l:
            out.append((f"a{i}^{j}", f"a{k}^{l}"))
    return out


def l_k33() -> Labeled:
    return labeled_from_names(_lk33_names(), _lk33_edges())


def ring_of_five(
    sizes: Sequence[int] = (0, 0, 0, 0, 0, 0),
    v_adjacency: Sequence[Sequence[Sequence[int]]] = (),
) -> Labeled:
    """``sizes`` gives |V_0|..|V_5|; ``v_adjacency`` lists edges
    ``((i, x), (j, y))`` between V_i and V_{i+1}.  The b_i stay pairwise
    nonadjacent."""
    if len(sizes) != 6 or any(s < 0 for s in sizes):
        raise SpecError("sizes", "ring of five takes six nonnegative sizes V_0..V_5", sizes)

    def idx(i: int) -> int:
        return (i - 1) % 5 + 1

    names = [f"a{i}" for i in range(1, 6)] + [f"b{i}" for i in range(1, 6)]
    for i in range(6):
        names += [f"V{i}.{x + 1}" for x in range(sizes[i])]
    edges = []
    for i in range(1, 6):
        a, a2, b = f"a{i}", f"a{idx(i + 1)}", f"b{idx(i + 3)}"
        edges += [(a, a2), (a, b), (a2, b), (a, f"b{i}")]
    for x in range(sizes[0]):
        edges += [(f"V0.{x + 1}", f"b{i}") for i in range(1, 6)]
    for i in range(1, 6):
        for x in range(sizes[i]):
            name = f"V{i}.{x + 1}"
            edges += [(name, f"a{idx(i - 1)}"), (name, f"b{i}"), (name, f"a{idx(i + 1)}")]
    for pair in v_adjacency:
        (i, x), (j, y) = pair
        if not (1 <= i <= 5 and 1 <= j <= 5) or (j - i) % 5 not in (1, 4):
            raise SpecError("v_adjacency", "only V_i and V_{i+1} may be joined", pair)
        if not (0 <= x < sizes[i] and 0 <= y < sizes[j]):
            raise SpecError("v_adjacency", "vertex index outside its V_i", pair)
        edges.append((f"V{i}.{x + 1}", f"V{j}.{y + 1}"))
    return labeled_from_names(names, edges)


def mantled_lk33(
    upper: Sequence[int] = (0, 0, 0),
    lower: Sequence[int] = (0, 0, 0),
    mantle_edges: Sequence[Sequence[str]] = (),
) -> Labeled:
    """``upper[i-1] = |V^i|`` (names ``U{i}.{x}``), ``lower[i-1] = |V_i|``
    (names ``L{i}.{x}``); mantle edges join different V^i, or different V_i,
    and may not create a triangle inside either mantle."""
    if len(upper) != 3 or len(lower) != 3 or min(*upper, *lower) < 0:
        raise SpecError("sizes", "mantles take three nonnegative sizes each")
    names = _lk33_names()
    edges = _lk33_edges()
    for i in (1, 2, 3):
        for x in range(upper[i - 1]):
            edges += [(f"U{i}.{x + 1}", f"a{i}^{j}") for j in (1, 2, 3)]
            names.append(f"U{i}.{x + 1}")
    for j in (1, 2, 3):
        for x in range(lower[j - 1]):
            edges += [(f"L{j}.{x + 1}", f"a{i}^{j}") for i in (1, 2, 3)]
            names.append(f"L{j}.{x + 1}")
    known = set(names)
    for pair in mantle_edges:
        p, q = pair
        if p not in known or q not in known or p[0] not in "UL" or q[0] not in "UL":
            raise SpecError("mantle_edges", "mantle edges join mantle vertices", pair)
        if p[0] != q[0]:
            raise SpecError("mantle_edges", "upper and lower mantles are anticomplete", pair)
        if p.split(".")[0] == q.split(".")[0]:
            raise SpecError("mantle_edges", "each V^i and V_i is stable", pair)
        edges.append((p, q))
    out = labeled_from_names(names, edges)
    g = out.graph
    for side in "UL":
        mask = sum(1 << v for v, name in enumerate(out.labels) if name[0] == side)
        for v in bits(mask):
            for u in bits(g.rows[v] & mask):
                common = g.rows[v] & g.rows[u] & mask
                if u > v and common:
                    w = (common & -common).bit_length() - 1
                    raise SpecError("mantle", "triangle inside a mantle", out.names((v, u, w)))
    return out


NAMED = ("icosahedron0", "icosahedron1", "icosahedron2", "rotator", "twister",
         "ring_of_five", "mantled_lk33", "l_k33")


def named_family(name: str, params: dict[str, Any] | None = None) -> Labeled:
    params = dict(params or {})
    if name.startswith("icosahedron") and name[-1] in "012":
        return icosahedron(int(name[-1]))
    if name == "rotator":
        return rotator()
    if name == "twister":
        return twister()
    if name == "l_k33":
        return l_k33()
    if name == "ring_of_five":
        return ring_of_five(params.get("sizes", (0,) * 6), params.get("v_adjacency", ()))
    if name == "mantled_lk33":
        return mantled_lk33(
            params.get("upper", (0, 0, 0)),
            params.get("lower", (0, 0, 0)),
            params.get("mantle_edges", ()),
        )
    raise SpecError("name", "unknown named family", name)


def random_ring_of_five_params(rng: random.Random, max_size: int = 1) -> dict:
    sizes = [rng.randint(0, max_size) for _ in range(6)]
    adjacency = []
    for i in range(1, 6):
        j = i % 5 + 1
        for x in range(sizes[i]):
            for y in range(sizes[j]):
                if rng.random() < 0.5:
                    adjacency.append(((i, x), (j, y)))
    return {"sizes": sizes, "v_adjacency": adjacency}


def random_mantled_params(rng: random.Random, max_size: int = 2) -> dict:
    upper = [rng.randint(0, max_size) for _ in range(3)]
    lower = [rng.randint(0, max_size) for _ in range(3)]
    mantle: list[tuple[str, str]] = []
    for side, sizes in (("U", upper), ("L", lower)):
        verts = [f"{side}{i}.{x + 1}" for i in (1, 2, 3) for x in range(sizes[i - 1])]
        nbrs: dict[str, set[str]] = {v: set() for v in verts}
        for p, q in combinations(verts, 2):
            if p.split(".")[0] == q.split(".")[0] or rng.random() < 0.5:
                continue
            if nbrs[p] & nbrs[q]:
                continue
            nbrs[p].add(q)
            nbrs[q].add(p)
            mantle.append((p, q))
    return {"upper": upper, "lower": lower, "mantle_edges": mantle}
