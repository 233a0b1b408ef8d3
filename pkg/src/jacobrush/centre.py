"""Brush centres: smallest vertex sets that can hold a minimum brush
allocation, tie-broken by the largest pairwise distance inside the set."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

from .cleaning import (
    CleaningTrace,
    check_trace,
    clean,
    clean_directed,
    compact,
    end_configuration,
    reverse_clean,
    support,
)
from .graph import CapExceeded, SimpleGraph, bfs_distances
from .jaco import build_jaco, jaconian_data
from .solvers import brush_number_exact, minimal_allocation_jaco

# Graphs at or below this size decide cleanability by exhaustive search;
# above it greedy is used, which the confluence suite validates.
CONFLUENCE_CAP = 6
SUPPORT_CAP = 16


@dataclass(frozen=True)
class Support:
    vertices: tuple[int, ...]
    allocation: dict[int, int]
    spread: float  # max pairwise distance; inf if the set spans components
    reachable_as_end: bool = False

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "allocation": {str(v): c for v, c in compact(self.allocation).items()},
            "spread": None if math.isinf(self.spread) else int(self.spread),
            "reachable_as_end": self.reachable_as_end,
        }


@dataclass(frozen=True)
class BrushCentre:
    b_r: int
    cardinality: int
    spread: float
    supports: tuple[Support, ...]

    def vertex_sets(self) -> set[frozenset[int]]:
        return {frozenset(s.vertices) for s in self.supports}

    def to_dict(self) -> dict:
        return {
            "b_r": self.b_r,
            "cardinality": self.cardinality,
            "spread": None if math.isinf(self.spread) else int(self.spread),
            "supports": [s.to_dict() for s in self.supports],
        }


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write ``total`` as ``parts`` positive integers."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cuts, total)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _cleans(g: SimpleGraph, alloc: dict[int, int]) -> CleaningTrace | None:
    policy = "exhaustive" if g.n <= CONFLUENCE_CAP else "greedy"
    t = clean(g, alloc, policy)
    return t if t.cleaned else None


def valid_supports(g: SimpleGraph, b: int, k: int) -> list[tuple[frozenset[int], dict[int, int]]]:
    """Every k-set S admitting an allocation of ``b`` brushes, positive exactly
    on S, that cleans ``g``; one witness allocation per set."""
    if k < 1 or k > g.n or b < k:
        return []
    if g.n > SUPPORT_CAP:
        raise CapExceeded(f"support search is limited to {SUPPORT_CAP} vertices")
    found = []
    spare = b - (k - 1)
    for s in itertools.combinations(g.vertices, k):
        # some member has to fire first, i.e. hold at least its degree
        if not any(g.degree(v) <= spare for v in s):
            continue
        for parts in _compositions(b, k):
            if not any(c >= g.degree(v) for v, c in zip(s, parts)):
                continue
            alloc = dict(zip(s, parts))
            t = _cleans(g, alloc)
            if t is not None:
                check_trace(t)
                found.append((frozenset(s), alloc))
                break
    return found


def _spread(dist: dict[int, dict[int, int | None]], vs: tuple[int, ...]) -> float:
    worst = 0.0
    for u, v in itertools.combinations(vs, 2):
        d = dist[u][v]
        if d is None:
            return math.inf
        worst = max(worst, d)
    return worst


def _reachable_as_end(g: SimpleGraph, alloc: dict[int, int]) -> bool:
    # Cleaning from alloc and then reversing ends back at alloc; the first
    # run's end state is therefore a start whose cleaning ends at alloc.
    t = clean(g, alloc, "greedy")
    if not t.cleaned:
        return False
    back = reverse_clean(g, t)
    return back.cleaned and compact(back.final) == compact(alloc)


def brush_centre(g: SimpleGraph, max_support: int | None = None) -> BrushCentre:
    b = brush_number_exact(g).value
    if b == 0:
        return BrushCentre(0, 0, 0.0, (Support((), {}, 0.0, True),))
    dist = bfs_distances(g)
    limit = min(b, g.n) if max_support is None else min(b, g.n, max_support)
    for k in range(1, limit + 1):
        cands = valid_supports(g, b, k)
        if not cands:
            continue
        scored = [(_spread(dist, tuple(sorted(s))), tuple(sorted(s)), a) for s, a in cands]
        best = min(sp for sp, _, _ in scored)
        keep = sorted((vs, a) for sp, vs, a in scored if sp == best)
        supports = tuple(Support(vs, a, best, _reachable_as_end(g, a)) for vs, a in keep)
        return BrushCentre(b, k, best, supports)
    raise CapExceeded(f"no valid support of size <= {limit}")


@dataclass
class Theorem31Row:
    n: int
    end_allocation: dict[int, int]
    end_support: tuple[int, ...]
    centre: BrushCentre
    hope_vertices: tuple[int, ...]
    trace: CleaningTrace
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return frozenset(self.end_support) in self.centre.vertex_sets()

    @property
    def end_in_hope(self) -> bool | None:
        if not self.hope_vertices and self.n < 2:
            return None
        return set(self.end_support) <= set(self.hope_vertices)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "end_allocation": {str(v): c for v, c in compact(self.end_allocation).items()},
            "end_support": list(self.end_support),
            "end_in_hope": self.end_in_hope,
            "centre": self.centre.to_dict(),
            "pass": self.passed,
        }


def verify_theorem_31(n: int) -> Theorem31Row:
    """Is the end state of the canonical minimal cleaning of J_n a brush centre?"""
    j = build_jaco(n)
    t = clean_directed(j.orientation, minimal_allocation_jaco(n))
    check_trace(t)
    if not t.cleaned:
        raise AssertionError(f"canonical minimal cleaning of J_{n} got stuck")
    end = end_configuration(t)
    hope = jaconian_data(j).hope_vertices if n >= 2 else ()
    centre = brush_centre(j.graph)
    for s in centre.supports:
        if _cleans(j.graph, s.allocation) is None:
            raise AssertionError(f"J_{n}: centre witness {s.vertices} does not re-verify")
    return Theorem31Row(n, end, tuple(sorted(support(end))), centre, hope, t)
