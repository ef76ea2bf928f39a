"""Simple graphs, uniform hypergraphs, 2-colorings and incidence matrices.

Vertices are labeled 1..d everywhere in the public API.  Edges are stored as
sorted tuples and kept in lexicographic order, which fixes the column order of
every incidence matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

Edge = Tuple[int, ...]


def _normalize_edges(vertex_count: int, edges: Iterable[Iterable[int]], size: int) -> Tuple[Edge, ...]:
    seen = set()
    for raw in edges:
        e = tuple(sorted(int(v) for v in raw))
        if len(e) != size:
            raise ValueError(f"edge {tuple(raw)} must have exactly {size} vertices")
        if len(set(e)) != size:
            raise ValueError(f"edge {e} repeats a vertex")
        for v in e:
            if not 1 <= v <= vertex_count:
                raise ValueError(f"vertex {v} in edge {e} is outside 1..{vertex_count}")
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..vertex_count."""

    vertex_count: int
    edges: Tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", _normalize_edges(vertex_count, edges, 2))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self) -> Dict[int, List[int]]:
        adj: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def isolated_vertices(self) -> List[int]:
        covered = {v for e in self.edges for v in e}
        return [v for v in self.vertices if v not in covered]

    def is_connected(self) -> bool:
        adj = self.neighbors()
        seen = {1}
        queue = deque([1])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def relabel(self, perm: Dict[int, int]) -> "Graph":
        return Graph(self.vertex_count, [(perm[i], perm[j]) for i, j in self.edges])

    def without_isolated(self) -> Tuple["Graph", int]:
        """Drop isolated vertices, relabel the rest to 1..d', return the count dropped."""
        isolated = set(self.isolated_vertices())
        keep = [v for v in self.vertices if v not in isolated]
        if not keep:
            raise ValueError("graph has no edges")
        new_label = {v: i for i, v in enumerate(keep, start=1)}
        g = Graph(len(keep), [(new_label[i], new_label[j]) for i, j in self.edges])
        return g, len(isolated)


@dataclass(frozen=True)
class Hypergraph:
    """r-uniform hypergraph on vertices 1..vertex_count."""

    vertex_count: int
    uniformity: int
    edges: Tuple[Edge, ...]

    def __init__(self, vertex_count: int, uniformity: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        if uniformity < 2:
            raise ValueError("uniformity must be at least 2")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "uniformity", int(uniformity))
        object.__setattr__(self, "edges", _normalize_edges(vertex_count, edges, uniformity))

    def isolated_vertices(self) -> List[int]:
        covered = {v for e in self.edges for v in e}
        return [v for v in range(1, self.vertex_count + 1) if v not in covered]


@dataclass(frozen=True)
class Bipartition:
    side_of: Dict[int, str]

    def part(self, side: str) -> List[int]:
        return sorted(v for v, s in self.side_of.items() if s == side)

    def separates(self, g: Graph) -> bool:
        return all(self.side_of[i] != self.side_of[j] for i, j in g.edges)


def linear_graph(n: int) -> Graph:
    """The path 1 - 2 - ... - n."""
    if n < 1:
        raise ValueError("linear_graph needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.vertex_count
    edges = list(g.edges) + [(i + shift, j + shift) for i, j in h.edges]
    return Graph(g.vertex_count + h.vertex_count, edges)


def tight_path_hypergraph(d: int, r: int) -> Hypergraph:
    """Consecutive r-windows {i, ..., i+r-1} of 1..d."""
    return Hypergraph(d, r, [tuple(range(i, i + r)) for i in range(1, d - r + 2)])


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Breadth-first 2-coloring; component roots get side A.  None on an odd cycle."""
    adj = g.neighbors()
    side: Dict[int, str] = {}
    for root in g.vertices:
        if root in side:
            continue
        side[root] = "A"
        queue = deque([root])
        while queue:
            v = queue.popleft()
            other = "B" if side[v] == "A" else "A"
            for w in adj[v]:
                if w not in side:
                    side[w] = other
                    queue.append(w)
                elif side[w] != other:
                    return None
    return Bipartition(side)


def incidence_matrix(g: Graph) -> List[List[int]]:
    """d x m 0/1 matrix, rows are vertices, columns follow g.edges."""
    return _incidence(g.vertex_count, g.edges)


def hypergraph_incidence_matrix(h: Hypergraph) -> List[List[int]]:
    return _incidence(h.vertex_count, h.edges)


def _incidence(d: int, edges: Tuple[Edge, ...]) -> List[List[int]]:
    rows = [[0] * len(edges) for _ in range(d)]
    for j, e in enumerate(edges):
        for v in e:
            rows[v - 1][j] = 1
    return rows


def all_graphs(d: int) -> Iterable[Graph]:
    """Every labeled simple graph on d vertices."""
    pairs = list(combinations(range(1, d + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(d, [p for i, p in enumerate(pairs) if mask >> i & 1])
