from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    """Per-invocation search limits."""

    node_limit: int = 10_000_000
    time_limit: float = 10.0

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")

    def to_dict(self) -> dict:
        return {"node_limit": self.node_limit, "time_limit": self.time_limit}


UNLIMITED = Budget(node_limit=1 << 62, time_limit=1e12)


class BudgetExhausted(RuntimeError):
    """The search was cut off; the answer is unknown, not negative."""

    def __init__(self, budget: Budget, nodes: int, elapsed: float):
        super().__init__(
            f"budget exhausted after {nodes} nodes / {elapsed:.2f}s "
            f"(limits {budget.node_limit} nodes / {budget.time_limit}s)"
        )
        self.budget = budget
        self.nodes = nodes
        self.elapsed = elapsed


class Tracker:
    """Counts search nodes against a budget; the node limit is exact, time is
    polled every 4096 nodes."""

    __slots__ = ("budget", "nodes", "start", "_next_check")

    def __init__(self, budget: Budget | None = None):
        self.budget = budget or Budget()
        self.nodes = 0
        self.start = time.perf_counter()
        self._next_check = 4096

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            self.check()
        if self.nodes >= self._next_check:
            self._next_check += 4096
            self.check()

    def check(self) -> None:
        elapsed = time.perf_counter() - self.start
        if self.nodes > self.budget.node_limit or elapsed > self.budget.time_limit:
            raise BudgetExhausted(self.budget, self.nodes, elapsed)


def tracker_for(budget: Budget | Tracker | None) -> Tracker:
    if isinstance(budget, Tracker):
        return budget
    return Tracker(budget)
