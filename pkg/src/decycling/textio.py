"""Reading and writing graphs.

Text format (0-indexed)::

    p <vertex_count> <edge_count>
    e <u> <v>
    ...

Lines starting with ``c`` are comments.  The structured format is JSON with
the same data plus optional vertex labels.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError


def to_text(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if header is not None:
                    raise GraphError(f"line {lineno}: duplicate header")
                header = (int(parts[-2]), int(parts[-1]))
            elif parts[0] == "e":
                if header is None:
                    raise GraphError(f"line {lineno}: edge before header")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: malformed record {raw!r}") from exc
    if header is None:
        raise GraphError("missing 'p' header line")
    n, m = header
    if m != len(edges):
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    return Graph(n, tuple(edges))


def to_structured(g: Graph) -> str:
    data = {
        "vertex_count": g.vertex_count,
        "edges": [list(e) for e in g.edges],
        "labels": list(g.labels) if g.labels is not None else None,
    }
    return json.dumps(data, sort_keys=True) + "\n"


def from_structured(text: str) -> Graph:
    try:
        data = json.loads(text)
        return Graph(int(data["vertex_count"]), tuple(tuple(e) for e in data["edges"]), data.get("labels"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed structured graph: {exc}") from exc


def read_graph(path: str | Path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return from_structured(text)
    return from_text(text)


def write_graph(g: Graph, path: str | Path, structured: bool = False) -> None:
    Path(path).write_text(to_structured(g) if structured else to_text(g))
