"""Verification suites that recompute every numeric claim and report rows."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from .centre import verify_theorem_31
from .cleaning import check_trace, clean, clean_directed, reverse_clean
from .graph import SimpleGraph, complete_graph, cycle_graph, from_edge_list, path_graph, star_graph
from .jaco import build_jaco
from .solvers import (
    DP_CAP,
    brush_number_exact,
    brush_number_permutation_check,
    compare_claims,
    minimal_allocation_jaco,
)

DEFAULT_SEED = 42


@dataclass
class SuiteResult:
    name: str
    rows: list[dict[str, Any]]
    # ok: harness ran and every witness re-verified; findings: claims refuted
    ok: bool = True
    findings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "findings": self.findings, "rows": self.rows}


def random_connected_graph(rng: random.Random, n_min: int, n_max: int, p: float | None = None) -> SimpleGraph:
    n = rng.randint(n_min, n_max)
    p = rng.random() if p is None else p
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    edges = {(perm[i], perm[rng.randrange(i)]) for i in range(1, n)}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges.add((u, v))
    return from_edge_list(n, edges)


def classics_suite(n_max: int = 8, cap: int = DP_CAP) -> SuiteResult:
    res = SuiteResult("classics", [])
    cases: list[tuple[str, SimpleGraph, int, str]] = []
    cases += [(f"P_{n}", path_graph(n), 1, "one brush") for n in range(2, 11)]
    cases += [(f"C_{n}", cycle_graph(n), 2, "two brushes") for n in range(3, 11)]
    cases += [(f"K_1,{n}", star_graph(n), n, "star: n brushes at hub") for n in range(2, n_max + 1)]
    cases += [(f"K_{n}", complete_graph(n), n * n // 4, "floor(n^2/4)") for n in range(2, n_max + 1)]
    for label, g, claimed, source in cases:
        value = brush_number_exact(g, cap).value
        row = {"instance": label, "claimed": claimed, "oracle": value, "agrees": value == claimed, "source": source}
        if label.startswith("K_") and "," not in label:
            perm = brush_number_permutation_check(g)
            row["permutation_check"] = perm
            if perm != value:
                res.ok = False
        res.rows.append(row)
        if value != claimed:
            res.findings.append(f"{label}: claimed {claimed}, oracle {value}")
    return res


def claim_suite(which: str, n_max: int, cap: int = DP_CAP) -> SuiteResult:
    report = compare_claims(range(2, n_max + 1), which, cap)
    res = SuiteResult(which, [r.to_dict() for r in report.rows])
    res.ok = all(r.witness_verified for r in report.rows)
    res.findings = [f"{r.label}: formula {r.formula_value}, oracle {r.oracle_value}" for r in report.rows if not r.agrees]
    return res


def thm31_suite(n_max: int = 10) -> SuiteResult:
    res = SuiteResult("thm31", [])
    for n in range(5, n_max + 1):
        row = verify_theorem_31(n)
        res.rows.append(row.to_dict())
        if not row.passed:
            res.findings.append(f"J_{n}: end support {list(row.end_support)} is not a brush centre")
        if row.end_in_hope is False:
            res.findings.append(f"J_{n}: end support leaves the Hope subgraph")
    return res


def confluence_suite(count: int = 200, seed: int = DEFAULT_SEED, n_max: int = 6) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("confluence", [])
    divergences = 0
    successes = 0
    for i in range(count):
        g = random_connected_graph(rng, 2, n_max)
        alloc = {v: rng.randint(0, g.degree(v)) for v in g.vertices}
        greedy = clean(g, alloc, "greedy")
        exhaustive = clean(g, alloc, "exhaustive")
        check_trace(greedy)
        check_trace(exhaustive)
        successes += greedy.cleaned
        if greedy.cleaned != exhaustive.cleaned:
            divergences += 1
            res.rows.append({"case": i, "n": g.n, "edges": [list(e) for e in g.sorted_edges()], "allocation": alloc})
    res.rows.insert(0, {"graphs": count, "seed": seed, "cleaned": successes, "divergences": divergences})
    res.ok = divergences == 0
    return res


def reversibility_suite(
    jaco_n_max: int = 12, count: int = 200, seed: int = DEFAULT_SEED, n_max: int = 10
) -> SuiteResult:
    res = SuiteResult("reversibility", [])
    failures = []

    def attempt(label: str, first) -> None:
        check_trace(first)
        if not first.cleaned:
            failures.append(f"{label}: first cleaning stuck")
            return
        back = reverse_clean(first.graph, first)
        check_trace(back)
        if not back.cleaned or sum(back.initial.values()) != sum(first.initial.values()):
            failures.append(f"{label}: reverse cleaning failed")

    for n in range(2, jaco_n_max + 1):
        j = build_jaco(n)
        attempt(f"J_{n}", clean_directed(j.orientation, minimal_allocation_jaco(n)))
    rng = random.Random(seed)
    for i in range(count):
        g = random_connected_graph(rng, 2, n_max)
        best = brush_number_exact(g)
        attempt(f"random#{i}", clean(g, best.witness_allocation, "greedy"))
    res.rows.append({"jaco": f"2..{jaco_n_max}", "random": count, "seed": seed, "failures": failures})
    res.ok = not failures
    return res


def verify_all(seed: int = DEFAULT_SEED, cap: int = DP_CAP) -> list[SuiteResult]:
    return [
        classics_suite(cap=cap),
        claim_suite("thm21", 12, cap),
        claim_suite("thm22", 8, cap),
        thm31_suite(10),
        confluence_suite(seed=seed),
        reversibility_suite(seed=seed),
    ]


def render_table(results: list[SuiteResult]) -> str:
    lines = [f"{'suite':<14} {'harness':<8} {'rows':>5}  findings"]
    for r in results:
        head = f"{r.name:<14} {'ok' if r.ok else 'BROKEN':<8} {len(r.rows):>5}  "
        if not r.findings:
            lines.append(head + "none")
            continue
        lines.append(head + r.findings[0])
        lines += [" " * len(head) + f for f in r.findings[1:]]
    return "\n".join(lines) + "\n"
