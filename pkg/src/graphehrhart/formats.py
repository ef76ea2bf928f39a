"""Readers for edge lists, hypergraph lists, and constraint matrices (CSV / JSON).

Edge list::

    5          # vertex count d
    1 2        # one edge per line, 1-based
    2 3

Hypergraph: first line ``d r``, then r labels per line.  Matrix: CSV rows of
nonnegative integers, or JSON ``{"rows": m, "cols": d, "data": [[...], ...]}``.
Blank lines and ``#`` comments are ignored everywhere except inside JSON.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from .graph_model import Graph, Hypergraph
from .polytope import ConstraintPolytope


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, source: str = "<input>"):
        self.line = line
        where = f"{source}:{line}: " if line else f"{source}: "
        super().__init__(where + message)


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(line: str, no: int, source: str, sep=None) -> List[int]:
    try:
        return [int(tok) for tok in (line.split(sep) if sep else line.split())]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", no, source) from None


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    return _parse_edges(text, source, hyper=False)


def parse_hypergraph(text: str, source: str = "<input>") -> Hypergraph:
    return _parse_edges(text, source, hyper=True)


def _parse_edges(text, source, hyper):
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input", 0, source)
    no, header = lines[0]
    head = _ints(header, no, source)
    want = 2 if hyper else 1
    if len(head) != want:
        raise ParseError(f"header must be {'`d r`' if hyper else '`d`'}, got {header!r}", no, source)
    d = head[0]
    if d < 1:
        raise ParseError(f"vertex count must be positive, got {d}", no, source)
    r = head[1] if hyper else 2
    if r < 2:
        raise ParseError(f"uniformity must be at least 2, got {r}", no, source)
    edges, seen = [], set()
    for no, line in lines[1:]:
        e = _ints(line, no, source)
        if len(e) != r:
            raise ParseError(f"edge needs exactly {r} vertices, got {len(e)}", no, source)
        for v in e:
            if not 1 <= v <= d:
                raise ParseError(f"vertex {v} outside 1..{d}", no, source)
        if len(set(e)) != r:
            raise ParseError(f"edge {tuple(e)} repeats a vertex", no, source)
        key = tuple(sorted(e))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", no, source)
        seen.add(key)
        edges.append(key)
    return Hypergraph(d, r, edges) if hyper else Graph(d, edges)


def parse_matrix_csv(text: str, source: str = "<input>") -> ConstraintPolytope:
    rows = []
    for no, line in _lines(text):
        row = _ints(line, no, source, sep=",")
        if any(a < 0 for a in row):
            raise ParseError("matrix entries must be nonnegative", no, source)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", no, source)
        rows.append(row)
    if not rows:
        raise ParseError("empty matrix", 0, source)
    try:
        return ConstraintPolytope(rows)
    except ValueError as exc:
        raise ParseError(str(exc), 0, source) from None


def parse_matrix_json(text: str, source: str = "<input>") -> ConstraintPolytope:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, source) from None
    data = obj.get("data") if isinstance(obj, dict) else None
    if not isinstance(data, list):
        raise ParseError('expected an object with a "data" list', 0, source)
    m, d = obj.get("rows", len(data)), obj.get("cols", len(data[0]) if data else 0)
    if len(data) != m or any(len(row) != d for row in data):
        raise ParseError(f'"data" does not match rows={m}, cols={d}', 0, source)
    try:
        return ConstraintPolytope(data)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), 0, source) from None


def matrix_to_json(p: ConstraintPolytope) -> str:
    return json.dumps({"rows": p.rows, "cols": p.dimension, "data": [list(r) for r in p.matrix]})


def graph_to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.vertex_count)] + [f"{i} {j}" for i, j in g.edges]) + "\n"


Instance = Union[Graph, Hypergraph, ConstraintPolytope]


def load_instance(path: Union[str, Path], kind: str = "auto") -> Instance:
    """Read a graph, hypergraph or matrix file.

    ``auto`` picks by suffix (.json, .csv) and otherwise by the header: one
    integer means an edge list, two mean a hypergraph.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), 0, str(path)) from None
    source = str(path)
    if kind == "auto":
        if path.suffix == ".json":
            kind = "json"
        elif path.suffix == ".csv":
            kind = "matrix"
        else:
            first = next(_lines(text), (0, ""))[1]
            kind = "hypergraph" if len(first.split()) == 2 else "graph"
    if kind == "graph":
        return parse_edge_list(text, source)
    if kind == "hypergraph":
        return parse_hypergraph(text, source)
    if kind == "matrix":
        return parse_matrix_json(text, source) if text.lstrip().startswith("{") else parse_matrix_csv(text, source)
    if kind == "json":
        return parse_matrix_json(text, source)
    raise ValueError(f"unknown input kind {kind!r}")
