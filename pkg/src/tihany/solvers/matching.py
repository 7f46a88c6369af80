"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..graph import Graph, bits


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not g.adjacent(u, v) or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


class _Blossom:
    def __init__(self, g: Graph):
        self.n = g.n
        self.rows = g.rows
        self.match = [-1] * g.n
        self.parent = [-1] * g.n
        self.base = list(range(g.n))

    def _lca(self, a: int, b: int) -> int:
        base, match, parent = self.base, self.match, self.parent
        seen = [False] * self.n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def _mark_path(self, v: int, b: int, child: int, blossom: list[bool]) -> None:
        base, match, parent = self.base, self.match, self.parent
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def _find_path(self, root: int) -> int:
        n, rows, match = self.n, self.rows, self.match
        used = [False] * n
        self.parent = parent = [-1] * n
        self.base = base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in bits(rows[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = self._lca(v, to)
                    blossom = [False] * n
                    self._mark_path(v, cur, to, blossom)
                    self._mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    def run(self) -> list[int]:
        match, rows = self.match, self.rows
        for v in range(self.n):
            if match[v] == -1:
                for u in bits(rows[v]):
                    if match[u] == -1:
                        match[u], match[v] = v, u
                        break
        for root in range(self.n):
            if match[root] != -1:
                continue
            v = self._find_path(root)
            while v != -1:
                pv = self.parent[v]
                ppv = match[pv]
                match[v], match[pv] = pv, v
                v = ppv
        return match


def maximum_matching(g: Graph) -> Matching:
    mate = _Blossom(g).run()
    return Matching(frozenset((v, u) for v, u in enumerate(mate) if v < u))


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size
