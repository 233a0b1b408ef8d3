"""Mycielski transform with role metadata."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graph import GraphError, SimpleGraph, norm_edge


@dataclass(frozen=True)
class MycielskiGraph:
    graph: SimpleGraph
    n: int  # order of the source graph

    @property
    def originals(self) -> list[int]:
        return list(range(1, self.n + 1))

    @property
    def shadows(self) -> list[int]:
        return list(range(self.n + 1, 2 * self.n + 1))

    @property
    def apex(self) -> int:
        return 2 * self.n + 1

    def shadow(self, i: int) -> int:
        return self.n + i

    def roles(self) -> dict[str, Any]:
        return {"v": self.originals, "x": self.shadows, "w": self.apex}


def mycielskian(g: SimpleGraph) -> MycielskiGraph:
    """Originals keep ids 1..n, shadow x_i is n+i, apex w is 2n+1."""
    n = g.n
    if n < 1:
        raise GraphError("Mycielskian needs at least one vertex")
    edges = set(g.edges)
    for u, v in g.edges:
        edges.add(norm_edge(u, n + v))
        edges.add(norm_edge(v, n + u))
    w = 2 * n + 1
    edges.update((n + i, w) for i in range(1, n + 1))
    labels = {i: f"v{i}" for i in range(1, n + 1)}
    labels.update({n + i: f"x{i}" for i in range(1, n + 1)})
    labels[w] = "w"
    return MycielskiGraph(SimpleGraph(w, frozenset(edges), labels), n)
