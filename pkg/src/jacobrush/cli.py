"""Command-line entry point.

    jacobrush jaco build --n 5 --format json
    jacobrush verify thm22 --n-max 8
    jacobrush brush centre --input j5.json

Exit status: 0 on success (also when a claim is refuted), 1 on I/O or cap
errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .centre import brush_centre
from .cleaning import CleaningTrace, check_trace, clean, clean_directed, compact, reverse_clean
from .graph import CapExceeded, GraphError, orient_by_ordering
from .jaco import build_jaco, jaconian_data
from .mycielski import mycielskian
from .solvers import (
    DP_CAP,
    brush_number_exact,
    brush_number_formula_jaco,
    brush_number_formula_mycielski_jaco,
    brush_number_permutation_check,
    minimal_allocation_jaco,
)
from .verify import (
    DEFAULT_SEED,
    claim_suite,
    classics_suite,
    confluence_suite,
    render_table,
    reversibility_suite,
    thm31_suite,
    verify_all,
)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _load_allocation(path: str) -> dict[int, int]:
    data = json.loads(Path(path).read_text())
    if "allocation" in data:
        data = data["allocation"]
    return {int(k): int(v) for k, v in data.items()}


def cmd_jaco_build(args) -> None:
    j = build_jaco(args.n)
    if args.format == "dot":
        sys.stdout.write(formats.orientation_to_dot(j.orientation, f"J{args.n}"))
    elif args.format == "text":
        sys.stdout.write(formats.graph_to_edgelist(j.graph))
    else:
        _emit({**formats.graph_to_dict(j.graph), "arcs": [list(a) for a in j.arcs]})


def cmd_jaco_info(args) -> None:
    j = build_jaco(args.n)
    info = {
        "n": j.n,
        "outdeg": list(j.outdeg[1:]),
        "indeg": list(j.indeg[1:]),
        "degree": [j.degree(i) for i in range(1, j.n + 1)],
        "minimal_allocation": list(minimal_allocation_jaco(j.n).values()),
    }
    if j.n >= 2:
        jd = jaconian_data(j)
        info.update(
            max_degree=jd.max_degree,
            jaconian_set=sorted(jd.jaconian_set),
            prime_jaconian=jd.prime,
            hope=list(jd.hope_vertices),
            hope_complete=jd.hope_is_complete(),
            brush_number_formula=brush_number_formula_jaco(j.n),
        )
    if args.format == "text":
        for k, v in info.items():
            sys.stdout.write(f"{k}: {v}\n")
    else:
        _emit(info)


def cmd_mycielski(args) -> None:
    src = build_jaco(args.jaco).graph if args.jaco else formats.load_graph(args.input)
    m = mycielskian(src)
    if args.format == "dot":
        sys.stdout.write(formats.graph_to_dot(m.graph, "mu"))
    elif args.format == "text":
        sys.stdout.write(formats.graph_to_edgelist(m.graph))
    else:
        _emit({**formats.graph_to_dict(m.graph), "roles": m.roles(), "connected": m.graph.is_connected()})


def cmd_brush_solve(args) -> None:
    method = args.method
    if method.startswith("formula-jaco:"):
        _emit({"method": method, "b_r": brush_number_formula_jaco(int(method.split(":", 1)[1]))})
        return
    if method.startswith("formula-mycielski:"):
        n = int(method.split(":", 1)[1])
        _emit({"method": method, "b_r": brush_number_formula_mycielski_jaco(n), "status": "claimed"})
        return
    if not args.input:
        raise GraphError(f"--input is required for method {method}")
    g = formats.load_graph(args.input)
    if method == "dp":
        _emit({"method": "dp", **brush_number_exact(g, args.cap_vertices).to_dict()})
    elif method == "perm":
        _emit({"method": "perm", "b_r": brush_number_permutation_check(g)})
    else:
        raise GraphError(f"unknown method {method!r}")


def _run_policy(g, alloc, policy: str) -> CleaningTrace:
    if policy.startswith("order:"):
        order = [int(x) for x in policy[len("order:") :].split(",") if x]
        return clean(g, alloc, order)
    if policy.startswith("directed:"):
        order = [int(x) for x in policy[len("directed:") :].split(",") if x]
        return clean_directed(orient_by_ordering(g, order), alloc)
    return clean(g, alloc, policy)


def cmd_brush_simulate(args) -> None:
    g = formats.load_graph(args.input)
    alloc = _load_allocation(args.allocation)
    t = _run_policy(g, alloc, args.policy)
    check_trace(t)
    out = t.to_dict()
    if args.reverse:
        if t.cleaned:
            back = reverse_clean(g, t)
            check_trace(back)
            out["reverse"] = back.to_dict()
        else:
            out["reverse"] = None
    _emit(out)


def cmd_brush_centre(args) -> None:
    g = formats.load_graph(args.input)
    _emit(brush_centre(g, args.max_support).to_dict())


def cmd_verify(args) -> None:
    suite = args.suite
    if suite == "all":
        results = verify_all(args.seed, args.cap_vertices)
    elif suite == "classics":
        results = [classics_suite(cap=args.cap_vertices)]
    elif suite in ("thm21", "thm22"):
        n_max = args.n_max or (12 if suite == "thm21" else 8)
        results = [claim_suite(suite, n_max, args.cap_vertices)]
    elif suite == "thm31":
        results = [thm31_suite(args.n_max or 10)]
    elif suite == "confluence":
        results = [confluence_suite(seed=args.seed)]
    else:
        results = [reversibility_suite(args.n_max or 12, seed=args.seed)]
    if args.format == "json":
        _emit([r.to_dict() for r in results] if suite == "all" else results[0].to_dict())
        return
    for r in results:
        if suite != "all":
            _print_rows(r)
    sys.stdout.write(render_table(results))


def _print_rows(r) -> None:
    if r.name in ("thm21", "thm22", "classics"):
        sys.stdout.write(f"{'instance':<16} {'formula':>8} {'oracle':>7}  agrees\n")
        for row in r.rows:
            claimed = row.get("formula", row.get("claimed"))
            sys.stdout.write(f"{row['instance']:<16} {claimed:>8} {row['oracle']:>7}  {row['agrees']}\n")
    elif r.name == "thm31":
        sys.stdout.write(f"{'n':>3}  {'end support':<16} {'centre supports':<28} pass\n")
        for row in r.rows:
            sets = ",".join("{" + " ".join(map(str, s["vertices"])) + "}" for s in row["centre"]["supports"])
            sys.stdout.write(f"{row['n']:>3}  {str(row['end_support']):<16} {sets:<28} {row['pass']}\n")
    else:
        for row in r.rows:
            sys.stdout.write(json.dumps(row) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jacobrush", description="Brush numbers of Jaco and Mycielski graphs")
    p.add_argument("--cap-vertices", type=_positive, default=DP_CAP, help="vertex cap for the subset DP")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "dot", "text"], default="json")

    jaco = sub.add_parser("jaco").add_subparsers(dest="action", required=True)
    for name, fn in (("build", cmd_jaco_build), ("info", cmd_jaco_info)):
        jp = jaco.add_parser(name, parents=[fmt])
        jp.add_argument("--n", type=_positive, required=True)
        jp.set_defaults(func=fn)

    mp = sub.add_parser("mycielski", parents=[fmt])
    src = mp.add_mutually_exclusive_group(required=True)
    src.add_argument("--jaco", type=_positive, metavar="N")
    src.add_argument("--input")
    mp.set_defaults(func=cmd_mycielski)

    brush = sub.add_parser("brush").add_subparsers(dest="action", required=True)
    sp = brush.add_parser("solve")
    sp.add_argument("--input")
    sp.add_argument("--method", default="dp", help="dp | perm | formula-jaco:N | formula-mycielski:N")
    sp.set_defaults(func=cmd_brush_solve)

    sim = brush.add_parser("simulate")
    sim.add_argument("--input", required=True)
    sim.add_argument("--allocation", required=True)
    sim.add_argument("--policy", default="greedy", help="greedy | exhaustive | order:1,2,... | directed:1,2,...")
    sim.add_argument("--reverse", action="store_true")
    sim.set_defaults(func=cmd_brush_simulate)

    cp = brush.add_parser("centre")
    cp.add_argument("--input", required=True)
    cp.add_argument("--max-support", type=_positive)
    cp.set_defaults(func=cmd_brush_centre)

    vp = sub.add_parser("verify")
    vp.add_argument("suite", choices=["classics", "thm21", "thm22", "thm31", "confluence", "reversibility", "all"])
    vp.add_argument("--n-max", type=_positive)
    vp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vp.add_argument("--format", choices=["json", "text"], default="text")
    vp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (GraphError, CapExceeded, OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
