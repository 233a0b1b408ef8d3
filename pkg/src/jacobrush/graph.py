"""Undirected simple graphs, orientations and distances.

Vertices are 1-based integers ``1..n`` throughout, so ``v_i`` in the
literature is simply ``i`` here.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]

ISOMORPHISM_CAP = 10


class GraphError(ValueError):
    """Malformed graph, orientation or ordering."""


class CapExceeded(RuntimeError):
    """An exact routine was asked to run above its size cap."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[Edge]
    # Optional role labels ("v1", "x3", "w", ...) used only for DOT output.
    labels: Mapping[int, str] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, keep: Iterable[int]) -> SimpleGraph:
        """Induced subgraph, relabelled ``1..k`` in increasing order of ``keep``."""
        order = sorted(set(keep))
        pos = {v: i + 1 for i, v in enumerate(order)}
        edges = {norm_edge(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos}
        return SimpleGraph(len(order), frozenset(edges))

    def relabel(self, perm: Mapping[int, int]) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> SimpleGraph:
    """Build a graph on ``1..n``; duplicate pairs collapse, loops are rejected."""
    edges = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge {(u, v)} out of range for n={n}")
        edges.add(norm_edge(u, v))
    return SimpleGraph(n, frozenset(edges))


def path_graph(n: int) -> SimpleGraph:
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])


def star_graph(leaves: int) -> SimpleGraph:
    """K_{1,leaves} with the hub at vertex 1."""
    return from_edge_list(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete_graph(n: int) -> SimpleGraph:
    return from_edge_list(n, itertools.combinations(range(1, n + 1), 2))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset())


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    shift = g.n
    edges = set(g.edges) | {(u + shift, v + shift) for u, v in h.edges}
    return SimpleGraph(g.n + h.n, frozenset(edges))


def check_permutation(g: SimpleGraph, ordering: Sequence[int]) -> list[int]:
    order = [int(v) for v in ordering]
    if sorted(order) != list(g.vertices):
        raise GraphError(f"ordering {order} is not a permutation of 1..{g.n}")
    return order


@dataclass(frozen=True)
class Orientation:
    """Every edge of ``base`` directed as a ``(tail, head)`` arc."""

    base: SimpleGraph
    arcs: frozenset[Edge]

    def __post_init__(self) -> None:
        if len(self.arcs) != len(self.base.edges):
            raise GraphError("orientation must direct every base edge exactly once")
        if {norm_edge(t, h) for t, h in self.arcs} != set(self.base.edges):
            raise GraphError("orientation arcs do not match base edges")

    @cached_property
    def out_nbrs(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in self.base.vertices}
        for t, h in self.arcs:
            out[t].add(h)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def in_nbrs(self) -> dict[int, frozenset[int]]:
        inn: dict[int, set[int]] = {v: set() for v in self.base.vertices}
        for t, h in self.arcs:
            inn[h].add(t)
        return {v: frozenset(s) for v, s in inn.items()}

    def degrees(self, v: int) -> tuple[int, int]:
        """``(outdeg, indeg)`` of ``v``."""
        return len(self.out_nbrs[v]), len(self.in_nbrs[v])

    def outdeg(self, v: int) -> int:
        return len(self.out_nbrs[v])

    def indeg(self, v: int) -> int:
        return len(self.in_nbrs[v])

    def reversed(self) -> Orientation:
        return Orientation(self.base, frozenset((h, t) for t, h in self.arcs))

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm with smallest-index tie breaking; None if cyclic."""
        indeg = {v: self.indeg(v) for v in self.base.vertices}
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for h in sorted(self.out_nbrs[v]):
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
            ready.sort()
        return order if len(order) == self.base.n else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None


def orient_by_ordering(g: SimpleGraph, ordering: Sequence[int]) -> Orientation:
    """Direct each edge from the earlier to the later vertex of ``ordering``."""
    order = check_permutation(g, ordering)
    pos = {v: i for i, v in enumerate(order)}
    arcs = frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges)
    return Orientation(g, arcs)


def orientation_from_arcs(g: SimpleGraph, arcs: Iterable[Sequence[int]]) -> Orientation:
    return Orientation(g, frozenset((int(t), int(h)) for t, h in arcs))


def degrees(o: Orientation, v: int) -> tuple[int, int]:
    return o.degrees(v)


def bfs_distances(g: SimpleGraph) -> dict[int, dict[int, int | None]]:
    """All-pairs hop distances; ``None`` marks unreachable pairs."""
    dist: dict[int, dict[int, int | None]] = {}
    for s in g.vertices:
        row: dict[int, int | None] = {v: None for v in g.vertices}
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if row[w] is None:
                    row[w] = row[u] + 1  # type: ignore[operator]
                    queue.append(w)
        dist[s] = row
    return dist


def is_isomorphic_small(g: SimpleGraph, h: SimpleGraph, cap: int = ISOMORPHISM_CAP) -> bool:
    """Backtracking isomorphism test for graphs of at most ``cap`` vertices."""
    if g.n > cap or h.n > cap:
        raise CapExceeded(f"isomorphism check is limited to {cap} vertices")
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(map(g.degree, g.vertices)) != sorted(map(h.degree, h.vertices)):
        return False

    order = sorted(g.vertices, key=lambda v: -g.degree(v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for cand in h.vertices:
            if cand in used or h.degree(cand) != g.degree(v):
                continue
            if all(h.has_edge(cand, mapping[u]) == g.has_edge(v, u) for u in mapping):
                mapping[v] = cand
                used.add(cand)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(cand)
        return False

    return extend(0)
