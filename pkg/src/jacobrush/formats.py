"""JSON, edge-list text and DOT serialization for graphs and orientations."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .graph import GraphError, Orientation, SimpleGraph, from_edge_list


def graph_to_dict(g: SimpleGraph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_dict(data: dict[str, Any]) -> SimpleGraph:
    try:
        n = int(data["n"])
        pairs = data["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph JSON needs 'n' and 'edges': {exc}") from None
    return from_edge_list(n, pairs)


def orientation_to_dict(o: Orientation) -> dict[str, Any]:
    return {"n": o.base.n, "arcs": [list(a) for a in sorted(o.arcs)]}


def graph_to_json(g: SimpleGraph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_from_json(text: str) -> SimpleGraph:
    return graph_from_dict(json.loads(text))


def graph_to_edgelist(g: SimpleGraph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_from_edgelist(text: str) -> SimpleGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise GraphError("edge-list text must start with a line holding n")
    n = int(rows[0][0])
    pairs = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphError(f"bad edge line: {' '.join(row)!r}")
        pairs.append((int(row[0]), int(row[1])))
    return from_edge_list(n, pairs)


def load_graph(path: str | Path) -> SimpleGraph:
    """Read a graph from a ``.json`` file or an edge-list text file."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return graph_from_edgelist(text)


def _label(g: SimpleGraph, v: int) -> str:
    if g.labels and v in g.labels:
        return g.labels[v]
    return f"v{v}"


def graph_to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{_label(g, v)}"];' for v in g.vertices]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_to_dot(o: Orientation, name: str = "G") -> str:
    g = o.base
    lines = [f"digraph {name} {{"]
    lines += [f'  {v} [label="{_label(g, v)}"];' for v in g.vertices]
    lines += [f"  {t} -> {h};" for t, h in sorted(o.arcs)]
    lines.append("}")
    return "\n".join(lines) + "\n"
