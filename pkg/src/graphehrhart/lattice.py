"""Exact lattice-point counting in dilates of P, their interiors, and dilates of Q.

Every count reduces to one problem: integer vectors y with lo_i <= y_i <= hi_i
and My <= rhs for a nonnegative matrix M.  ``_BoxCounter`` solves it by
depth-first assignment of coordinates while carrying the partial sum of each
row.  A branch is cut as soon as a row's partial sum plus the smallest value
its unassigned coordinates can still add exceeds the row's bound.

Subtrees are cached on the search frontier.  A row with two or more
unassigned coordinates keeps its partial sum in the key; a row with exactly
one left is folded into an upper cap on that coordinate.  For graph
polytopes the caps collapse most frontiers, which is what keeps d = 8 and
t = 13 cheap.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .graph_model import Graph
from .polytope import ConstraintPolytope, DilatedReflexive, from_graph, q_coordinate_bounds


def variable_order(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Coordinates sorted by how many rows they touch, most first."""
    d = len(matrix[0])
    touched = [sum(1 for row in matrix if row[j]) for j in range(d)]
    return sorted(range(d), key=lambda j: (-touched[j], j))


class _BoxCounter:
    def __init__(self, matrix, rhs, lo, hi, order=None):
        self.matrix = [tuple(r) for r in matrix]
        self.rhs = list(rhs)
        self.lo = list(lo)
        self.hi = list(hi)
        self.order = list(order) if order is not None else variable_order(self.matrix)
        d = len(self.order)
        pos = {v: p for p, v in enumerate(self.order)}
        self.infeasible = any(not any(row) and b < 0 for row, b in zip(self.matrix, self.rhs))

        support = [sorted(pos[j] for j, a in enumerate(row) if a) for row in self.matrix]

        def remaining(r, p):
            return [q for q in support[r] if q > p]

        def multi_after(p):
            return tuple(
                r for r in range(len(self.matrix))
                if support[r] and support[r][0] <= p and len(remaining(r, p)) >= 2
            )

        self.plan = []
        for p, v in enumerate(self.order):
            incoming = multi_after(p - 1) if p else ()
            slot = {r: i for i, r in enumerate(incoming)}
            outgoing = multi_after(p)
            # rows constraining v directly: (coefficient, incoming slot or None, rhs, least rest)
            bounds = []
            # rows that become single-variable after v: (coefficient on v, slot, rhs, offset of w, coefficient on w)
            to_caps = []
            for r, row in enumerate(self.matrix):
                a = row[v]
                if not a or (r not in slot and support[r][0] != p):
                    continue
                rest = remaining(r, p)
                least = sum(row[self.order[q]] * self.lo[self.order[q]] for q in rest)
                bounds.append((a, slot.get(r), self.rhs[r], least))
                if len(rest) == 1:
                    w = self.order[rest[0]]
                    to_caps.append((a, slot.get(r), self.rhs[r], rest[0] - p - 1, row[w]))
            carry = [(slot.get(r), self.matrix[r][v]) for r in outgoing]
            self.plan.append((bounds, to_caps, carry))
        self.memo: List[Dict[tuple, int]] = [dict() for _ in range(d)]

    def count(self) -> int:
        if self.infeasible:
            return 0
        if not self.order:
            return 1
        if any(l > h for l, h in zip(self.lo, self.hi)):
            return 0
        caps = tuple(self.hi[v] for v in self.order)
        return self._count(0, caps, ())

    def _count(self, p: int, caps: Tuple[int, ...], partials: Tuple[int, ...]) -> int:
        key = (caps, partials)
        cached = self.memo[p].get(key)
        if cached is not None:
            return cached
        v = self.order[p]
        lo, hi = self.lo[v], caps[0]
        bounds, to_caps, carry = self.plan[p]
        for a, src, b, least in bounds:
            s = partials[src] if src is not None else 0
            cap = (b - s - least) // a
            if cap < hi:
                hi = cap
        if hi < lo:
            result = 0
        elif p == len(self.order) - 1:
            result = hi - lo + 1
        else:
            result = 0
            rest_lo = [self.lo[w] for w in self.order[p + 1:]]
            for x in range(lo, hi + 1):
                new_caps = list(caps[1:])
                for a, src, b, off, aw in to_caps:
                    s = (partials[src] if src is not None else 0) + a * x
                    c = (b - s) // aw
                    if c < new_caps[off]:
                        new_caps[off] = c
                if any(c < l for c, l in zip(new_caps, rest_lo)):
                    continue
                nxt = tuple(
                    (partials[src] if src is not None else 0) + a * x for src, a in carry
                )
                result += self._count(p + 1, tuple(new_caps), nxt)
        self.memo[p][key] = result
        return result


def count_box(matrix, rhs, lo, hi, workers: Optional[int] = None) -> int:
    """Integer points of {lo <= y <= hi, My <= rhs}; M must be nonnegative.

    With ``workers`` > 1 the values of the first coordinate in search order are
    split across processes and the partial counts are summed in value order.
    """
    order = variable_order(matrix)
    if not workers or workers <= 1 or not order:
        return _BoxCounter(matrix, rhs, lo, hi, order).count()
    v = order[0]
    jobs = []
    for x in range(lo[v], hi[v] + 1):
        lo_x, hi_x = list(lo), list(hi)
        lo_x[v] = hi_x[v] = x
        jobs.append((matrix, rhs, lo_x, hi_x, order))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_count_job, jobs))
    return sum(parts)


def _count_job(args) -> int:
    return _BoxCounter(*args).count()


def _p_system(p: ConstraintPolytope, t: int, strict: bool):
    d = p.dimension
    if strict:
        return p.matrix, [t - 1] * p.rows, [1] * d, [t - 1] * d
    return p.matrix, [t] * p.rows, [0] * d, [t] * d


def count_points(p: ConstraintPolytope, t: int, strict: bool = False, workers: Optional[int] = None) -> int:
    """|tP ∩ Z^d|, or the interior count |tP° ∩ Z^d| when strict."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 0 if strict else 1
    return count_box(*_p_system(p, t, strict), workers=workers)


def _q_system(q: DilatedReflexive, t: int, strict: bool):
    bounds = q_coordinate_bounds(q, t)
    hi = [b[1] for b in bounds]
    if strict:
        # integer form of My < t*rhs, y > -t
        return q.base.matrix, [t * b - 1 for b in q.rhs], [1 - t] * q.dimension, hi
    return q.base.matrix, [t * b for b in q.rhs], [-t] * q.dimension, hi


def count_points_Q(q: DilatedReflexive, t: int, strict: bool = False) -> int:
    """|tQ ∩ Z^d|, or interior points of tQ when strict (y >= -(t-1), My <= t-1)."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if strict and t == 0:
        return 0
    return count_box(*_q_system(q, t, strict))


def count_weighted_graphs(g: Graph, n: int) -> int:
    """|W(n; G)|: weightings in {0..n}^d with n_i + n_j <= n on every edge."""
    if not g.edges:
        return (n + 1) ** g.vertex_count
    core, isolated = g.without_isolated()
    return count_points(from_graph(core), n) * (n + 1) ** isolated


# independent oracles: full-box filters with no pruning or caching


def naive_count(p: ConstraintPolytope, t: int, strict: bool = False) -> int:
    vals = range(1, t) if strict else range(0, t + 1)
    bound = t - 1 if strict else t
    return sum(
        1
        for x in product(vals, repeat=p.dimension)
        if all(sum(a * xi for a, xi in zip(row, x)) <= bound for row in p.matrix)
    )


def naive_count_Q(q: DilatedReflexive, t: int, strict: bool = False) -> int:
    bounds = q_coordinate_bounds(q, t)
    ranges = [range(lo, hi + 1) for lo, hi in bounds]
    return sum(1 for y in product(*ranges) if q.contains(y, t, strict))


Source = Union[ConstraintPolytope, DilatedReflexive]


@dataclass(frozen=True)
class CountTable:
    source: Source
    entries: Tuple[Tuple[int, int], ...]
    kind: str

    @property
    def values(self) -> List[int]:
        return [c for _, c in self.entries]

    def __getitem__(self, t: int) -> int:
        return dict(self.entries)[t]

    def __len__(self) -> int:
        return len(self.entries)


def count_table(source: Source, t_max: int, strict: bool = False, workers: Optional[int] = None) -> CountTable:
    if t_max < 0:
        raise ValueError("t_max must be nonnegative")
    if isinstance(source, DilatedReflexive):
        values = [count_points_Q(source, t, strict) for t in range(t_max + 1)]
    else:
        values = [count_points(source, t, strict, workers) for t in range(t_max + 1)]
    kind = "interior" if strict else "closed"
    return CountTable(source, tuple(enumerate(values)), kind)
