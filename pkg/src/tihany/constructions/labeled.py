from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..graph import Graph, GraphError, make_graph


class SpecError(ValueError):
    """A construction parameter breaks the definition it is meant to satisfy."""

    def __init__(self, clause: str, message: str, witness: object = None):
        super().__init__(f"{clause}: {message}" + (f" (witness {witness})" if witness is not None else ""))
        self.clause = clause
        self.witness = witness


@dataclass(frozen=True)
class Labeled:
    """A graph together with a human name for every vertex."""

    graph: Graph
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise GraphError("one label per vertex is required")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("labels must be distinct")

    def index(self, name: str) -> int:
        return self.labels.index(name)

    def ids(self, names: Iterable[str]) -> list[int]:
        lookup = {name: i for i, name in enumerate(self.labels)}
        return [lookup[name] for name in names]

    def names(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(vertices)]

    def to_dict(self) -> dict:
        return {"labels": list(self.labels)}


def labeled_from_names(names: Sequence[str], edges: Iterable[tuple[str, str]]) -> Labeled:
    lookup = {name: i for i, name in enumerate(names)}
    return Labeled(make_graph(len(names), [(lookup[a], lookup[b]) for a, b in edges]), tuple(names))
