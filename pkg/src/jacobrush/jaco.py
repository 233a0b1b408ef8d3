"""Finite Jaco graphs J_n(1) and their Jaconian structure."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .graph import GraphError, Orientation, SimpleGraph


@dataclass(frozen=True)
class JacoGraph:
    n: int
    orientation: Orientation
    outdeg: tuple[int, ...]  # index 0 unused, so outdeg[i] belongs to v_i
    indeg: tuple[int, ...]

    @property
    def graph(self) -> SimpleGraph:
        return self.orientation.base

    def degree(self, i: int) -> int:
        return self.outdeg[i] + self.indeg[i]

    @cached_property
    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self.orientation.arcs)


@dataclass(frozen=True)
class JaconianData:
    max_degree: int
    jaconian_set: frozenset[int]
    prime: int
    hope_vertices: tuple[int, ...]
    hope: SimpleGraph  # induced on hope_vertices, relabelled 1..k

    def hope_is_complete(self) -> bool:
        k = self.hope.n
        return len(self.hope.edges) == k * (k - 1) // 2


@lru_cache(maxsize=None)
def build_jaco(n: int) -> JacoGraph:
    """Construct J_n(1) in one left-to-right pass.

    In-arcs of ``v_i`` only come from lower indices, so ``indeg[i]`` is final
    by the time ``v_i`` emits arcs to every ``v_j`` with
    ``i < j <= min(n, 2i - indeg[i])``.
    """
    if n < 1:
        raise GraphError(f"Jaco graph order must be >= 1, got {n}")
    indeg = [0] * (n + 1)
    outdeg = [0] * (n + 1)
    arcs = []
    for i in range(1, n + 1):
        for j in range(i + 1, min(n, 2 * i - indeg[i]) + 1):
            arcs.append((i, j))
            outdeg[i] += 1
            indeg[j] += 1
    base = SimpleGraph(n, frozenset(arcs))
    return JacoGraph(n, Orientation(base, frozenset(arcs)), tuple(outdeg), tuple(indeg))


def out_degree_unbounded(i: int) -> int:
    """Out-degree of v_i in J_inf(1); every out-neighbour has index <= 2i."""
    if i < 1:
        raise GraphError(f"vertex index must be >= 1, got {i}")
    return build_jaco(2 * i).outdeg[i]


def jaconian_data(j: JacoGraph) -> JaconianData:
    if j.n < 2:
        raise GraphError("Jaconian data needs n >= 2")
    degs = {i: j.degree(i) for i in range(1, j.n + 1)}
    top = max(degs.values())
    jset = frozenset(i for i, d in degs.items() if d == top)
    prime = min(jset)
    hope_vs = tuple(range(prime + 1, j.n + 1))
    return JaconianData(top, jset, prime, hope_vs, j.graph.induced(hope_vs))


def smaller_graph_degree(n: int, i: int) -> int:
    """Total degree of v_i in J_n(1) as ``indeg + (n - i)``.

    Only valid while v_i's out-neighbourhood is cut off by the prefix, i.e.
    ``n < i + d^+_inf(v_i)``.
    """
    if not 1 <= i <= n:
        raise GraphError(f"vertex {i} not in J_{n}(1)")
    if n >= i + out_degree_unbounded(i):
        raise GraphError(
            f"n={n} >= i + d+_inf(v_{i}) = {i + out_degree_unbounded(i)}; identity does not apply"
        )
    return build_jaco(n).indeg[i] + (n - i)
