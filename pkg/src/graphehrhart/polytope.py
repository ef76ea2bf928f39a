"""Positive reflexive polytopes {x >= 0, Mx <= 1} and their dilated reflexive form.

A nonnegative integer matrix M with an implicit all-ones right-hand side
defines P.  When every row of M sums to the same s, the polytope is regular
and Q = kP - u with k = s + 1 is described by stacking M over -I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .graph_model import Graph, Hypergraph, hypergraph_incidence_matrix, incidence_matrix

Number = Union[int, Fraction]
Matrix = Tuple[Tuple[int, ...], ...]


class IsolatedVertexError(ValueError):
    """Raised when a vertex appears in no constraint row, so P would be unbounded."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(
            f"vertex {vertex} is isolated: no constraint bounds it "
            "(use the product rule, e.g. --isolated product, to count such graphs)"
        )


@dataclass(frozen=True)
class ConstraintPolytope:
    matrix: Matrix

    def __init__(self, matrix: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(a) for a in row) for row in matrix)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        d = len(rows[0])
        if any(len(r) != d for r in rows):
            raise ValueError("matrix rows have unequal lengths")
        if any(a < 0 for r in rows for a in r):
            raise ValueError("matrix entries must be nonnegative")
        for j in range(d):
            if all(r[j] == 0 for r in rows):
                raise IsolatedVertexError(j + 1)
        object.__setattr__(self, "matrix", rows)

    @property
    def dimension(self) -> int:
        return len(self.matrix[0])

    @property
    def rows(self) -> int:
        return len(self.matrix)

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(r) for r in self.matrix)


@dataclass(frozen=True)
class RegularityCertificate:
    row_sum: int
    k: int


@dataclass(frozen=True)
class DilatedReflexive:
    """Q = kP - u as the system [M; -I] y <= (rhs; 1).

    ``rhs`` is all ones for a genuine dilated reflexive polytope; other values
    exist only to build corrupted negative controls.
    """

    base: ConstraintPolytope
    k: int
    rhs: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.base.dimension

    def stacked_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        d = self.dimension
        neg_identity = tuple(tuple(-1 if i == j else 0 for j in range(d)) for i in range(d))
        return self.base.matrix + neg_identity

    def stacked_rhs(self) -> Tuple[int, ...]:
        return self.rhs + (1,) * self.dimension

    def contains(self, point: Sequence[Number], t: int = 1, strict: bool = False) -> bool:
        """Evaluate y in tQ (or its interior) through the stacked system."""
        if len(point) != self.dimension:
            raise ValueError(f"point has length {len(point)}, expected {self.dimension}")
        for row, b in zip(self.stacked_matrix(), self.stacked_rhs()):
            lhs = sum(a * y for a, y in zip(row, point))
            if (lhs >= t * b) if strict else (lhs > t * b):
                return False
        return True

    def corrupted(self, row: int = 0, value: int = 2) -> "DilatedReflexive":
        rhs = list(self.rhs)
        rhs[row] = value
        return DilatedReflexive(self.base, self.k, tuple(rhs))


def from_graph(g: Graph) -> ConstraintPolytope:
    """P(G) = {x >= 0 : B^t x <= 1}; rejects graphs with isolated vertices."""
    isolated = g.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(isolated[0])
    b = incidence_matrix(g)
    return ConstraintPolytope([list(col) for col in zip(*b)])


def from_hypergraph(h: Hypergraph) -> ConstraintPolytope:
    isolated = h.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(isolated[0])
    b = hypergraph_incidence_matrix(h)
    return ConstraintPolytope([list(col) for col in zip(*b)])


def regularity(p: ConstraintPolytope) -> Optional[RegularityCertificate]:
    sums = set(p.row_sums())
    if len(sums) != 1:
        return None
    s = sums.pop()
    if s < 1:
        return None
    return RegularityCertificate(row_sum=s, k=s + 1)


def dilate_reflexive(p: ConstraintPolytope, cert: RegularityCertificate) -> DilatedReflexive:
    if regularity(p) != cert:
        raise ValueError("certificate does not match the polytope's row sums")
    return DilatedReflexive(p, cert.k, (1,) * p.rows)


def membership(p: ConstraintPolytope, point: Sequence[Number], t: int = 1, strict: bool = False) -> bool:
    """x in tP, or x in the interior of tP when strict."""
    if len(point) != p.dimension:
        raise ValueError(f"point has length {len(point)}, expected {p.dimension}")
    if strict:
        if any(x <= 0 for x in point):
            return False
        return all(sum(a * x for a, x in zip(row, point)) < t for row in p.matrix)
    if any(x < 0 for x in point):
        return False
    return all(sum(a * x for a, x in zip(row, point)) <= t for row in p.matrix)


def q_coordinate_bounds(q: DilatedReflexive, t: int) -> Tuple[Tuple[int, int], ...]:
    """Integer box containing tQ: each y_i lies in [-t, hi_i].

    hi_i comes from any row touching coordinate i with every other coordinate
    at its lower bound -t; for regular Q with unit rhs this is at most s*t.
    """
    bounds = []
    for i in range(q.dimension):
        hi = None
        for row, b in zip(q.base.matrix, q.rhs):
            a = row[i]
            if a == 0:
                continue
            cap = (t * b + t * (sum(row) - a)) // a
            hi = cap if hi is None else min(hi, cap)
        bounds.append((-t, hi))
    return tuple(bounds)
