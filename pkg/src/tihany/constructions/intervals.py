"""Linear and circular interval graphs, optionally fuzzy on endpoint pairs.

Positions are integers.  On a circle of length ``L`` an arc ``(s, e)`` runs
clockwise from ``s`` to ``e``; it covers the unit segments ``s, s+1, ...,
e-1`` (mod L), and the arcs have union the whole circle exactly when every
unit segment is covered.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..graph import make_graph
from .labeled import Labeled, SpecError
from .thickening import Pattern, Thickening, ThickeningSpec, normalize_pairs, thicken


@dataclass(frozen=True)
class IntervalSpec:
    circular: bool
    length: int
    points: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]
    fuzzy_pairs: tuple[tuple[int, int], ...] = ()

    def covers(self, interval: tuple[int, int], pos: int) -> bool:
        s, e = interval
        if self.circular:
            return (pos - s) % self.length <= (e - s) % self.length
        return s <= pos <= e

    def members(self, interval: tuple[int, int]) -> list[int]:
        return [i for i, p in enumerate(self.points) if self.covers(interval, p)]

    def segments(self, interval: tuple[int, int]) -> set[int]:
        s, e = interval
        span = (e - s) % self.length
        return {(s + t) % self.length for t in range(span)}

    def endpoint_pairs(self) -> tuple[tuple[int, int], ...]:
        """F': pairs of vertices sitting at the two ends of one interval."""
        where = {p: i for i, p in enumerate(self.points)}
        out = []
        for s, e in self.intervals:
            if s in where and e in where:
                out.append((where[s], where[e]))
        return normalize_pairs(out)

    def outer_endpoint_pairs(self) -> tuple[tuple[int, int], ...]:
        """Endpoint pairs of intervals whose two ends lie in no other interval.

        Making a nested pair fuzzy can create a claw: a vertex of the outer
        interval sees both ends and also a vertex beyond one of them.
        """
        where = {p: i for i, p in enumerate(self.points)}
        out = []
        for arc in self.intervals:
            s, e = arc
            if s not in where or e not in where:
                continue
            if any(o != arc and self.covers(o, s) and self.covers(o, e) for o in self.intervals):
                continue
            out.append((where[s], where[e]))
        return normalize_pairs(out)

    def validate(self) -> None:
        pts = self.points
        if len(set(pts)) != len(pts):
            raise SpecError("points", "two vertices share a position")
        hi = self.length if self.circular else self.length + 1
        for p in pts:
            if not 0 <= p < hi:
                raise SpecError("points", "position off the circle/line", p)
        ends: list[int] = []
        for s, e in self.intervals:
            if s == e:
                raise SpecError("intervals", "an interval needs two distinct endpoints", (s, e))
            if not (0 <= s < hi and 0 <= e < hi):
                raise SpecError("intervals", "endpoint off the circle/line", (s, e))
            if not self.circular and s > e:
                raise SpecError("intervals", "linear intervals run left to right", (s, e))
            ends.extend((s, e))
        if len(set(ends)) != len(ends):
            dup = next(p for p in ends if ends.count(p) > 1)
            raise SpecError("endpoints", "two intervals share an endpoint", dup)
        if self.circular:
            everything = set(range(self.length))
            for size in (1, 2, 3):
                for fam in combinations(self.intervals, size):
                    covered: set[int] = set()
                    for arc in fam:
                        covered |= self.segments(arc)
                    if covered == everything:
                        raise SpecError("cover", "at most three intervals cover the circle", fam)
        allowed = set(self.endpoint_pairs())
        seen: set[int] = set()
        for pair in normalize_pairs(self.fuzzy_pairs):
            if pair not in allowed:
                raise SpecError("fuzzy", "pair is not the two ends of one interval", pair)
            for w in pair:
                if w in seen:
                    raise SpecError("fuzzy", "a vertex lies in two fuzzy pairs", w)
                seen.add(w)


def interval_graph(spec: IntervalSpec) -> Labeled:
    spec.validate()
    edges = set()
    for arc in spec.intervals:
        edges.update(combinations(spec.members(arc), 2))
    labels = tuple(f"p{p}" for p in spec.points)
    return Labeled(make_graph(len(spec.points), sorted(edges)), labels)


def fuzzy_interval_graph(
    spec: IntervalSpec, sizes: Sequence[int], patterns: Sequence[Pattern]
) -> Thickening:
    base = interval_graph(spec)
    pairs = normalize_pairs(spec.fuzzy_pairs)
    return thicken(ThickeningSpec(base.graph, tuple(sizes), pairs, tuple(patterns), base.labels))


def random_circular_spec(
    rng: random.Random,
    vertices: int,
    max_reach: int,
    start_prob: float = 0.85,
    attempts: int = 200,
    uniform: bool = False,
) -> IntervalSpec:
    """Vertices at even positions of a circle of length ``2 * vertices``.

    Each vertex may start an arc reaching ``1..max_reach`` vertices ahead; the
    arc ends on that vertex when nothing else uses it as an endpoint, and
    just past it otherwise.  With ``uniform`` every vertex starts an arc of
    reach ``max_reach``, which gives powers of cycles.
    """
    length = 2 * vertices
    for _ in range(attempts):
        starts = [i for i in range(vertices) if uniform or rng.random() < start_prob]
        used = {2 * i for i in starts}
        intervals = []
        for i in starts:
            reach = max_reach if uniform else rng.randint(1, max_reach)
            target = 2 * ((i + reach) % vertices)
            for end in (target, (target + 1) % length):
                if end not in used:
                    used.add(end)
                    intervals.append((2 * i, end))
                    break
        spec = IntervalSpec(True, length, tuple(2 * i for i in range(vertices)), tuple(intervals))
        try:
            spec.validate()
        except SpecError:
            continue
        return spec
    raise SpecError("cover", "could not place arcs without a three-arc cover")
