"""JSON and DOT serialization for graphs, colorings and reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .coloring import EdgeColoring, OneFactorization
from .errors import FormatError, GraphError
from .graph import Graph

# qualitative palette for DOT output; colors beyond it cycle
_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def dumps(obj: Any) -> str:
    return json.dumps(obj) + "\n"


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [[a, b] for a, b in g.edges]}


def _int_field(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise FormatError(f"{where}: missing field '{key}'")
    val = obj[key]
    if not isinstance(val, int) or isinstance(val, bool):
        raise FormatError(f"{where}: field '{key}' must be an integer, got {val!r}")
    return val


def graph_from_json(obj: Any, where: str = "graph") -> Graph:
    """Parse the canonical graph format; the edge list must already be canonical."""
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected a JSON object")
    n = _int_field(obj, "n", where)
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise FormatError(f"{where}: field 'edges' must be a list")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise FormatError(f"{where}: edges[{i}] must be a pair of integers, got {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(n, tuple(pairs))
    except GraphError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def coloring_to_json(c: EdgeColoring) -> dict[str, Any]:
    return {"k": c.k, "colors": list(c.colors)}


def coloring_from_json(obj: Any, where: str = "coloring") -> EdgeColoring:
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected a JSON object")
    k = _int_field(obj, "k", where)
    colors = obj.get("colors")
    if not isinstance(colors, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in colors):
        raise FormatError(f"{where}: field 'colors' must be a list of integers")
    try:
        return EdgeColoring(k, tuple(colors))
    except GraphError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def factorization_to_json(f: OneFactorization) -> dict[str, Any]:
    return {"n": f.graph.n, "factors": [[list(p) for p in m] for m in f.matchings]}


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj))


def to_dot(g: Graph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    """Graphviz source; edges carry ``label`` and ``color`` for their color class."""
    lines = [f"graph {name} {{"]
    lines += [f"  {x};" for x in range(g.n)]
    for i, (a, b) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"  {a} -- {b};")
        else:
            c = coloring.colors[i]
            lines.append(f'  {a} -- {b} [label="{c}", color="{_PALETTE[(c - 1) % len(_PALETTE)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
