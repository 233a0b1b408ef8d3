"""Brush cleaning: firing rules, traces, end configurations, reverse runs.

A vertex *fires* by sending one brush along every incident dirty edge at
once; it may do so when it holds at least that many brushes. Brushes it
holds beyond that stay where they are. Each vertex fires at most once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import CapExceeded, Edge, GraphError, Orientation, SimpleGraph, check_permutation, norm_edge

Allocation = dict[int, int]

EXHAUSTIVE_CAP = 12

CLEANED = "cleaned"
STUCK = "stuck"


class IneligibleFiring(ValueError):
    """A vertex was fired without enough brushes, twice, or out of turn."""


def make_allocation(g: SimpleGraph, counts: Mapping[int, int] | None = None) -> Allocation:
    """Normalize to a full ``{vertex: count}`` map over ``g``; rejects negatives."""
    alloc = {v: 0 for v in g.vertices}
    for v, c in (counts or {}).items():
        v, c = int(v), int(c)
        if v not in alloc:
            raise GraphError(f"allocation names vertex {v} outside 1..{g.n}")
        if c < 0:
            raise GraphError(f"negative brush count {c} at vertex {v}")
        alloc[v] = c
    return alloc


def support(alloc: Mapping[int, int]) -> frozenset[int]:
    return frozenset(v for v, c in alloc.items() if c > 0)


def compact(alloc: Mapping[int, int]) -> dict[int, int]:
    """Drop zero entries, sorted by vertex."""
    return {v: alloc[v] for v in sorted(alloc) if alloc[v]}


@dataclass(frozen=True)
class FiringEvent:
    vertex: int
    dispatched: tuple[tuple[Edge, int], ...]  # (cleaned edge, receiver)
    surplus_retained: int

    @property
    def cleaned(self) -> list[Edge]:
        return [e for e, _ in self.dispatched]


@dataclass(frozen=True)
class CleaningState:
    graph: SimpleGraph
    dirty: frozenset[Edge]
    brushes: Mapping[int, int]
    fired: frozenset[int]

    @classmethod
    def fresh(cls, g: SimpleGraph, alloc: Mapping[int, int]) -> CleaningState:
        return cls(g, frozenset(g.edges), make_allocation(g, alloc), frozenset())

    def total(self) -> int:
        return sum(self.brushes.values())


def dirty_degree(s: CleaningState, v: int) -> int:
    return sum(1 for u in s.graph.adj[v] if norm_edge(u, v) in s.dirty)


def is_eligible(s: CleaningState, v: int) -> bool:
    return v not in s.fired and s.brushes[v] >= dirty_degree(s, v)


def fire(s: CleaningState, v: int) -> tuple[CleaningState, FiringEvent]:
    if v in s.fired:
        raise IneligibleFiring(f"vertex {v} has already fired")
    receivers = sorted(u for u in s.graph.adj[v] if norm_edge(u, v) in s.dirty)
    if s.brushes[v] < len(receivers):
        raise IneligibleFiring(f"vertex {v} holds {s.brushes[v]} brushes but has {len(receivers)} dirty edges")
    brushes = dict(s.brushes)
    brushes[v] -= len(receivers)
    for u in receivers:
        brushes[u] += 1
    cleaned = [norm_edge(u, v) for u in receivers]
    event = FiringEvent(v, tuple((e, u) for e, u in zip(cleaned, receivers)), brushes[v])
    return CleaningState(s.graph, s.dirty.difference(cleaned), brushes, s.fired | {v}), event


@dataclass(frozen=True)
class CleaningTrace:
    graph: SimpleGraph
    initial: dict[int, int]
    events: tuple[FiringEvent, ...]
    outcome: str
    remaining_dirty: frozenset[Edge]
    final: dict[int, int]
    policy: str = "greedy"
    failed_at: int | None = None  # first ineligible vertex of an explicit ordering
    directed: bool = field(default=False)

    @property
    def cleaned(self) -> bool:
        return self.outcome == CLEANED

    @property
    def order(self) -> list[int]:
        return [e.vertex for e in self.events]

    def to_dict(self) -> dict:
        out = {
            "initial": {str(v): c for v, c in compact(self.initial).items()},
            "events": [
                {"vertex": e.vertex, "cleaned": [list(c) for c in e.cleaned], "surplus": e.surplus_retained}
                for e in self.events
            ],
            "outcome": self.outcome,
            "end": {str(v): c for v, c in compact(self.final).items()},
            "policy": self.policy,
        }
        if self.remaining_dirty:
            out["remaining_dirty"] = [list(e) for e in sorted(self.remaining_dirty)]
        if self.failed_at is not None:
            out["failed_at"] = self.failed_at
        return out


def _finish(s: CleaningState, initial, events, policy, failed_at=None) -> CleaningTrace:
    outcome = CLEANED if not s.dirty else STUCK
    return CleaningTrace(
        s.graph, dict(initial), tuple(events), outcome, s.dirty, dict(s.brushes), policy, failed_at
    )


def _run_sequence(g: SimpleGraph, alloc: Allocation, order: Iterable[int], policy: str) -> CleaningTrace:
    s = CleaningState.fresh(g, alloc)
    events = []
    for v in order:
        if not is_eligible(s, v):
            return _finish(s, alloc, events, policy, failed_at=v)
        s, ev = fire(s, v)
        events.append(ev)
    return _finish(s, alloc, events, policy)


def _greedy(g: SimpleGraph, alloc: Allocation) -> CleaningTrace:
    s = CleaningState.fresh(g, alloc)
    events = []
    while s.dirty:
        v = next((u for u in g.vertices if dirty_degree(s, u) > 0 and is_eligible(s, u)), None)
        if v is None:
            break
        s, ev = fire(s, v)
        events.append(ev)
    return _finish(s, alloc, events, "greedy")


def _exhaustive(g: SimpleGraph, alloc: Allocation, cap: int) -> CleaningTrace:
    if g.n > cap:
        raise CapExceeded(f"exhaustive cleaning is limited to {cap} vertices")
    # The state after firing a set F depends only on F: an unfired v holds
    # alloc[v] + |N(v) & F| brushes and has |N(v) - F| dirty edges.
    dead: set[frozenset[int]] = set()

    def search(fired: frozenset[int], path: list[int]) -> list[int] | None:
        live = [v for v in g.vertices if v not in fired and g.adj[v] - fired]
        if not live:
            return path
        if fired in dead:
            return None
        for v in live:
            nbrs = g.adj[v]
            if alloc[v] + len(nbrs & fired) >= len(nbrs - fired):
                found = search(fired | {v}, path + [v])
                if found is not None:
                    return found
        dead.add(fired)
        return None

    found = search(frozenset(), [])
    if found is None:
        # report where greedy got stuck, flagged as exhaustive
        t = _greedy(g, alloc)
        return CleaningTrace(t.graph, t.initial, t.events, STUCK, t.remaining_dirty, t.final, "exhaustive")
    return _run_sequence(g, alloc, found, "exhaustive")


def clean(
    g: SimpleGraph,
    alloc: Mapping[int, int],
    policy: str | Sequence[int] = "greedy",
    cap: int = EXHAUSTIVE_CAP,
) -> CleaningTrace:
    """Run the cleaning process on an undirected graph.

    ``policy`` is ``"greedy"`` (fire the smallest eligible vertex that still
    has a dirty edge, until none is left), ``"exhaustive"`` (search every
    firing order, small graphs only), or an explicit vertex permutation that
    is fired in turn; the first ineligible vertex is reported as
    ``failed_at``.
    """
    beta = make_allocation(g, alloc)
    if isinstance(policy, str):
        if policy == "greedy":
            return _greedy(g, beta)
        if policy == "exhaustive":
            return _exhaustive(g, beta, cap)
        raise GraphError(f"unknown cleaning policy {policy!r}")
    order = check_permutation(g, policy)
    return _run_sequence(g, beta, order, "order")


def clean_directed(o: Orientation, alloc: Mapping[int, int]) -> CleaningTrace:
    """Clean along arcs only; v may fire once all its in-arcs are clean and it
    holds at least as many brushes as it has out-arcs."""
    g = o.base
    brushes = make_allocation(g, alloc)
    initial = dict(brushes)
    dirty = set(o.arcs)
    fired: set[int] = set()
    events = []
    while dirty:
        v = next(
            (
                u
                for u in g.vertices
                if u not in fired
                and o.out_nbrs[u]
                and not (o.in_nbrs[u] - fired)
                and brushes[u] >= len(o.out_nbrs[u])
            ),
            None,
        )
        if v is None:
            break
        heads = sorted(o.out_nbrs[v])
        brushes[v] -= len(heads)
        for h in heads:
            brushes[h] += 1
            dirty.discard((v, h))
        fired.add(v)
        events.append(FiringEvent(v, tuple((norm_edge(v, h), h) for h in heads), brushes[v]))
    remaining = frozenset(norm_edge(t, h) for t, h in dirty)
    return CleaningTrace(
        g, initial, tuple(events), CLEANED if not dirty else STUCK, remaining, brushes, "directed-greedy",
        directed=True,
    )


def induced_orientation(t: CleaningTrace) -> Orientation:
    """Arcs point the way brushes travelled; only defined for cleaned traces."""
    if not t.cleaned:
        raise GraphError("trace did not clean the graph")
    arcs = frozenset((e.vertex, recv) for e in t.events for _, recv in e.dispatched)
    return Orientation(t.graph, arcs)


def end_configuration(t: CleaningTrace) -> dict[int, int]:
    if not t.cleaned:
        raise GraphError("end configuration is only defined for a cleaned trace")
    return dict(t.final)


def reverse_clean(g: SimpleGraph, t: CleaningTrace) -> CleaningTrace:
    """Second cleaning from the end configuration along the reversed orientation."""
    if g != t.graph:
        raise GraphError("trace belongs to a different graph")
    sigma = induced_orientation(t)
    return clean_directed(sigma.reversed(), end_configuration(t))


def replay(t: CleaningTrace) -> dict[int, int]:
    """Re-apply the recorded events from the initial allocation; returns final counts."""
    brushes = dict(t.initial)
    dirty = set(t.graph.edges)
    seen: set[int] = set()
    for e in t.events:
        if e.vertex in seen:
            raise IneligibleFiring(f"vertex {e.vertex} fires twice")
        seen.add(e.vertex)
        if brushes[e.vertex] < len(e.dispatched):
            raise IneligibleFiring(f"vertex {e.vertex} lacks brushes on replay")
        for edge, recv in e.dispatched:
            if edge not in dirty or e.vertex not in edge or recv not in edge or recv == e.vertex:
                raise IneligibleFiring(f"bad dispatch {edge} -> {recv}")
            dirty.discard(edge)
            brushes[e.vertex] -= 1
            brushes[recv] += 1
        if brushes[e.vertex] != e.surplus_retained:
            raise IneligibleFiring(f"surplus mismatch at vertex {e.vertex}")
    if frozenset(dirty) != t.remaining_dirty:
        raise IneligibleFiring("remaining dirty set does not match replay")
    return brushes


def check_trace(t: CleaningTrace) -> None:
    """Assert conservation, single firing, replay fidelity and, for cleaned
    traces, end = initial + indeg - outdeg under the induced orientation."""
    total = sum(t.initial.values())
    if sum(t.final.values()) != total:
        raise AssertionError("brush count not conserved")
    if replay(t) != t.final:
        raise AssertionError("replay does not reproduce the final state")
    if t.cleaned:
        sigma = induced_orientation(t)
        for v in t.graph.vertices:
            out, inn = sigma.degrees(v)
            if t.final[v] != t.initial[v] + inn - out:
                raise AssertionError(f"end-configuration identity fails at vertex {v}")
