"""Path-of-triangles and cycle-of-triangles graphs.

The builder turns sizes plus the few genuinely free choices into a graph;
the validator then re-reads every clause (P1)-(P7) or (C1)-(C6) from the
adjacency alone, so a builder mistake cannot hide behind its own output.

Vertex names: odd set ``X_o`` splits into ``L{o}.t``, ``M{o}.t``, ``R{o}.t``;
even set ``X_e`` into hat vertices ``H{e}.t`` and the rest ``N{e}.t``.
Two sets are *matched* when the edges between them form a perfect matching.
Matchings are built in index order (``t``-th to ``t``-th).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product

from ..analysis import is_prismatic
from ..graph import Graph, make_graph
from .labeled import Labeled


@dataclass(frozen=True)
class TriangleChainSpec:
    cyclic: bool
    n: int
    hats: tuple[int, ...]
    rests: tuple[int, ...]
    lmr: tuple[tuple[int, int, int], ...]
    # non-hat vertex name -> side per R-L matching edge (0: the R end, 1: the L end)
    ends: dict[str, tuple[int, ...]] = field(default_factory=dict)
    # pairs of non-hat vertex names, in even sets at distance 2 mod 3, left nonadjacent
    even_gaps: tuple[tuple[str, str], ...] = ()

    @property
    def count(self) -> int:
        return 2 * self.n if self.cyclic else 2 * self.n + 1

    def to_dict(self) -> dict:
        return {
            "cyclic": self.cyclic,
            "n": self.n,
            "hats": list(self.hats),
            "rests": list(self.rests),
            "lmr": [list(t) for t in self.lmr],
            "ends": {k: list(v) for k, v in sorted(self.ends.items())},
            "even_gaps": [list(p) for p in self.even_gaps],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TriangleChainSpec":
        return cls(
            bool(data["cyclic"]),
            int(data["n"]),
            tuple(data["hats"]),
            tuple(data["rests"]),
            tuple(tuple(t) for t in data["lmr"]),
            {k: tuple(v) for k, v in data.get("ends", {}).items()},
            tuple(tuple(p) for p in data.get("even_gaps", ())),
        )


@dataclass(frozen=True)
class ChainFailure:
    clause: str
    witness: object

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class TriangleChain:
    labeled: Labeled
    # set index -> part name ("L", "M", "R", "H", "N") -> vertex ids
    parts: dict[int, dict[str, tuple[int, ...]]]
    spec: TriangleChainSpec

    @property
    def graph(self) -> Graph:
        return self.labeled.graph

    def x(self, i: int) -> tuple[int, ...]:
        return tuple(v for part in self.parts[i].values() for v in part)

    def canonical_coloring(self) -> tuple[frozenset[int], ...]:
        """(A_1, A_2, A_0): X_i grouped by i modulo 3.

        A proper colouring for path chains only; on a cycle of 2n sets with
        n = 2 mod 3 the grouping wraps and X_1, X_2n land in the same class.
        """
        groups: dict[int, set[int]] = {1: set(), 2: set(), 0: set()}
        for i in self.parts:
            groups[i % 3].update(self.x(i))
        return tuple(frozenset(groups[k]) for k in (1, 2, 0))


class _Layout:
    def __init__(self, spec: TriangleChainSpec):
        self.spec = spec
        self.count = spec.count
        self.names: list[str] = []
        self.parts: dict[int, dict[str, list[int]]] = {}
        for i in range(1, self.count + 1):
            if i % 2:
                sizes = dict(zip("LMR", spec.lmr[(i - 1) // 2]))
            else:
                sizes = {"H": spec.hats[i // 2 - 1], "N": spec.rests[i // 2 - 1]}
            self.parts[i] = {}
            for key, size in sizes.items():
                ids = []
                for t in range(size):
                    ids.append(len(self.names))
                    self.names.append(f"{key}{i}.{t + 1}")
                self.parts[i][key] = ids

    def wrap(self, i: int) -> int:
        return (i - 1) % self.count + 1

    def part(self, i: int, key: str) -> list[int]:
        return self.parts[self.wrap(i)][key]

    def x(self, i: int) -> list[int]:
        return [v for ids in self.parts[self.wrap(i)].values() for v in ids]

    def distance(self, i: int, j: int) -> int:
        """j - i on a path; for a cycle the forward offset k in 1..2n-1."""
        return (j - i) % self.count if self.spec.cyclic else j - i

    def consecutive_odd(self, i: int, j: int) -> bool:
        k = self.distance(i, j)
        if self.spec.cyclic:
            return k in (2, self.count - 2)
        return k == 2

    def adjacent_sets(self, i: int, j: int) -> bool:
        k = self.distance(i, j)
        if self.spec.cyclic:
            return k in (1, self.count - 1)
        return k == 1

    def even_centres(self) -> list[int]:
        return list(range(2, self.count + 1, 2))


def _shape_failure(spec: TriangleChainSpec) -> ChainFailure | None:
    if spec.n < 1:
        return ChainFailure("shape", "n must be at least 1")
    odd = spec.n if spec.cyclic else spec.n + 1
    if len(spec.hats) != spec.n or len(spec.rests) != spec.n or len(spec.lmr) != odd:
        return ChainFailure("shape", "size lists do not match n")
    if min(spec.hats + spec.rests + tuple(x for t in spec.lmr for x in t)) < 0:
        return ChainFailure("shape", "negative size")
    return None


def _build(layout: _Layout) -> tuple[Graph, ChainFailure | None]:
    spec = layout.spec
    edges: set[tuple[int, int]] = set()

    def join(us, vs) -> None:
        for u in us:
            for v in vs:
                edges.add((min(u, v), max(u, v)))

    def match(us, vs) -> None:
        for u, v in zip(us, vs):
            edges.add((min(u, v), max(u, v)))

    lookup = {name: i for i, name in enumerate(layout.names)}
    gaps = set()
    for p, q in spec.even_gaps:
        if p not in lookup or q not in lookup:
            return make_graph(0), ChainFailure("even_gaps", (p, q))
        gaps.add((min(lookup[p], lookup[q]), max(lookup[p], lookup[q])))

    # far pairs of sets
    for i, j in combinations(range(1, layout.count + 1), 2):
        if layout.adjacent_sets(i, j):
            continue
        if layout.distance(i, j) % 3 != 2:
            continue
        if i % 2 and j % 2 and layout.consecutive_odd(i, j):
            continue
        pairs = [(min(u, v), max(u, v)) for u in layout.x(i) for v in layout.x(j)]
        edges.update(p for p in pairs if p not in gaps)

    for e in layout.even_centres():
        lo, hi = e - 1, e + 1
        hat = layout.part(e, "H")
        r_lo, l_hi = layout.part(lo, "R"), layout.part(hi, "L")
        if len(hat) == 1:
            join(hat, r_lo + layout.part(lo, "M") + l_hi + layout.part(hi, "M"))
        else:
            match(hat, layout.part(lo, "M"))
            match(hat, layout.part(hi, "M"))
        rungs = list(zip(r_lo, l_hi))
        for v in layout.part(e, "N"):
            sides = spec.ends.get(layout.names[v], (0,) * len(rungs))
            if len(sides) != len(rungs):
                return make_graph(0), ChainFailure("ends", layout.names[v])
            for (r, l), side in zip(rungs, sides):
                join([v], [l if side else r])
        # the two odd sets around X_e
        if len(hat) == 1:
            match(r_lo, l_hi)
            join(layout.part(lo, "L"), layout.x(hi))
            join(layout.x(lo), layout.part(hi, "R"))
        else:
            hat_of: dict[int, set[int]] = {}
            for h, m in zip(hat, layout.part(lo, "M")):
                hat_of.setdefault(m, set()).add(h)
            for h, m in zip(hat, layout.part(hi, "M")):
                hat_of.setdefault(m, set()).add(h)
            for u in layout.x(lo):
                for v in layout.x(hi):
                    if not (hat_of.get(u, set()) & hat_of.get(v, set())):
                        join([u], [v])
    return make_graph(len(layout.names), sorted(edges)), None


def _matched(g: Graph, xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    yset = sum(1 << y for y in ys)
    xset = sum(1 << x for x in xs)
    return all((g.rows[x] & yset).bit_count() == 1 for x in xs) and all(
        (g.rows[y] & xset).bit_count() == 1 for y in ys
    )


def _complete(g: Graph, xs, ys) -> bool:
    return all(g.adjacent(x, y) for x in xs for y in ys)


def _anticomplete(g: Graph, xs, ys) -> bool:
    return not any(g.adjacent(x, y) for x in xs for y in ys)


def validate_chain(g: Graph, layout: _Layout) -> ChainFailure | None:
    """Check every defining clause literally; the first failure wins."""
    spec = layout.spec
    cyc = spec.cyclic
    tag = "C" if cyc else "P"
    n = spec.n
    hat = {e: layout.part(e, "H") for e in layout.even_centres()}
    hatset = {v for e in hat for v in hat[e]}

    if cyc and (n < 5 or n % 3 != 2):
        return ChainFailure("C", f"cycle needs n >= 5 with n = 2 mod 3, got {n}")
    for i in range(1, layout.count + 1):
        xs = layout.x(i)
        if any(g.adjacent(u, v) for u, v in combinations(xs, 2)):
            return ChainFailure("stable", f"X_{i}")

    # (P1)/(C1)
    for e in hat:
        if not hat[e]:
            return ChainFailure(f"{tag}1", f"hat of X_{e} is empty")
    if not cyc and (len(hat[2]) != 1 or len(hat[2 * n]) != 1):
        return ChainFailure("P1", "end hats must be singletons")
    pairs = range(1, n) if not cyc else range(1, n + 1)
    for i in pairs:
        a, b = hat[2 * i], hat[layout.wrap(2 * i + 2)]
        if len(a) > 1 and len(b) > 1:
            return ChainFailure(f"{tag}1", f"hats of X_{2 * i} and X_{layout.wrap(2 * i + 2)} both large")

    # (P2)/(C2)
    for i, j in combinations(range(1, layout.count + 1), 2):
        if layout.adjacent_sets(i, j):
            continue
        for u, v in product(layout.x(i), layout.x(j)):
            if layout.distance(i, j) % 3 == 2:
                if g.adjacent(u, v):
                    continue
                odd_ok = i % 2 and j % 2 and layout.consecutive_odd(i, j)
                even_ok = not i % 2 and not j % 2 and u not in hatset and v not in hatset
                if not (odd_ok or even_ok):
                    return ChainFailure(f"{tag}2(1)", layout_names(layout, (u, v)))
            elif g.adjacent(u, v):
                return ChainFailure(f"{tag}2(2)", layout_names(layout, (u, v)))

    # (P3)
    if not cyc:
        last = 2 * n + 1
        if layout.part(1, "L") or layout.part(1, "M") or layout.part(last, "M") or layout.part(last, "R"):
            return ChainFailure("P3", "L_1, M_1, M_2n+1 and R_2n+1 must be empty")
        # (P4)
        if not layout.part(1, "R") and (n < 2 or len(hat[4]) <= 1):
            return ChainFailure("P4", "R_1 empty needs n >= 2 and a large hat in X_4")
        if not layout.part(last, "L") and (n < 2 or len(hat[2 * n - 2]) <= 1):
            return ChainFailure("P4", "L_2n+1 empty needs n >= 2 and a large hat in X_2n-2")

    for i in range(1, n + 1):
        e, lo, hi = 2 * i, 2 * i - 1, 2 * i + 1
        xe = layout.x(e)
        rest = layout.part(e, "N")
        L_lo, M_lo, R_lo = (layout.part(lo, k) for k in "LMR")
        L_hi, M_hi, R_hi = (layout.part(hi, k) for k in "LMR")
        c4 = f"{tag}5" if not cyc else "C4"
        if not _anticomplete(g, xe, L_lo + R_hi):
            return ChainFailure(c4, f"X_{e} touches L_{lo} or R_{layout.wrap(hi)}")
        if not _anticomplete(g, rest, M_lo + M_hi):
            return ChainFailure(c4, f"non-hat part of X_{e} touches an M set")
        rungs = [(r, l) for r in R_lo for l in L_hi if g.adjacent(r, l)]
        for v in rest:
            for r, l in rungs:
                if g.adjacent(v, r) == g.adjacent(v, l):
                    return ChainFailure(c4, layout_names(layout, (v, r, l)))
        c5 = "P6" if not cyc else "C5"
        c6 = "P7" if not cyc else "C6"
        if len(hat[e]) == 1:
            if not _matched(g, R_lo, L_hi):
                return ChainFailure(f"{c5}(1)", f"R_{lo} and L_{layout.wrap(hi)} not matched")
            for u in M_lo + R_lo:
                for v in L_hi + M_hi:
                    if g.adjacent(u, v) and not (u in R_lo and v in L_hi):
                        return ChainFailure(f"{c5}(1)", layout_names(layout, (u, v)))
            if not _complete(g, hat[e], R_lo + M_lo + L_hi + M_hi):
                return ChainFailure(f"{c5}(2)", f"hat of X_{e}")
            if not _complete(g, L_lo, layout.x(hi)) or not _complete(g, layout.x(lo), R_hi):
                return ChainFailure(f"{c5}(3)", f"around X_{e}")
            if (cyc or i > 1) and not _matched(g, M_lo, hat[layout.wrap(e - 2)]):
                return ChainFailure(f"{c5}(4)", f"M_{lo} and hat of X_{layout.wrap(e - 2)}")
            if (cyc or i < n) and not _matched(g, M_hi, hat[layout.wrap(e + 2)]):
                return ChainFailure(f"{c5}(4)", f"M_{layout.wrap(hi)} and hat of X_{layout.wrap(e + 2)}")
        elif cyc or 1 < i < n:
            if R_lo or L_hi:
                return ChainFailure(f"{c6}(1)", f"R_{lo} or L_{layout.wrap(hi)} nonempty")
            for u in layout.x(lo):
                for v in layout.x(hi):
                    shared = any(g.adjacent(u, h) and g.adjacent(v, h) for h in hat[e])
                    if g.adjacent(u, v) == shared:
                        return ChainFailure(f"{c6}(2)", layout_names(layout, (u, v)))
    return None


def layout_names(layout: _Layout, vs) -> tuple[str, ...]:
    return tuple(layout.names[v] for v in vs)


def triangle_chain(spec: TriangleChainSpec) -> TriangleChain | ChainFailure:
    shape = _shape_failure(spec)
    if shape is not None:
        return shape
    layout = _Layout(spec)
    g, failure = _build(layout)
    if failure is not None:
        return failure
    failure = validate_chain(g, layout)
    if failure is not None:
        return failure
    if not is_prismatic(g):
        return ChainFailure("prismatic", "clauses hold but the output is not prismatic")
    parts = {i: {k: tuple(v) for k, v in layout.parts[i].items()} for i in layout.parts}
    return TriangleChain(Labeled(g, tuple(layout.names)), parts, spec)


def random_chain_spec(rng: random.Random, cyclic: bool, n: int, max_part: int = 1) -> TriangleChainSpec:
    """Sizes chosen so the matching clauses can hold; free choices by coin flip."""
    hats = [1] * n
    for i in range(n):
        if not cyclic and i in (0, n - 1):
            continue
        left = hats[i - 1] if (cyclic or i > 0) else 1
        right_free = True
        if cyclic and i == n - 1:
            right_free = hats[0] == 1
        if left == 1 and right_free and rng.random() < 0.3:
            hats[i] = 2
    count = 2 * n if cyclic else 2 * n + 1
    odd_sets = n if cyclic else n + 1

    def hat_at(e: int) -> int | None:
        if cyclic:
            return hats[((e - 2) % count) // 2]
        return hats[e // 2 - 1] if 2 <= e <= 2 * n else None

    lmr = []
    for k in range(odd_sets):
        o = 2 * k + 1
        left, right = hat_at(o - 1), hat_at(o + 1)
        m = max(h for h in (left, right) if h is not None)
        if not cyclic and o in (1, 2 * n + 1):
            m = 0
        lmr.append([0, m, 0])
    for i in range(1, n + 1):
        e = 2 * i
        lo = (e - 2) // 2
        hi = (e // 2) % odd_sets
        if hats[i - 1] == 1:
            low = 1 if (not cyclic and (i == 1 or i == n)) else 0
            size = rng.randint(low, max_part)
            lmr[lo][2] = size
            lmr[hi][0] = size
    rests = [rng.randint(0, max_part) for _ in range(n)]
    ends = {}
    for i in range(1, n + 1):
        rungs = lmr[i - 1][2]
        for t in range(rests[i - 1]):
            ends[f"N{2 * i}.{t + 1}"] = tuple(rng.randint(0, 1) for _ in range(rungs))
    gaps = []
    nonhat = [(2 * i, f"N{2 * i}.{t + 1}") for i in range(1, n + 1) for t in range(rests[i - 1])]
    for (e1, p), (e2, q) in combinations(nonhat, 2):
        d = (e2 - e1) % count if cyclic else e2 - e1
        adjacent_sets = d in (1, count - 1) if cyclic else d == 1
        if e1 != e2 and not adjacent_sets and d % 3 == 2 and rng.random() < 0.5:
            gaps.append((p, q))
    return TriangleChainSpec(
        cyclic, n, tuple(hats), tuple(rests), tuple(tuple(t) for t in lmr), ends, tuple(gaps)
    )
