import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphehrhart.graph_model import Graph, complete_bipartite_graph, cycle_graph, disjoint_union, linear_graph
from graphehrhart.lattice import (
    count_box,
    count_points,
    count_points_Q,
    count_table,
    count_weighted_graphs,
    naive_count,
    naive_count_Q,
)
from graphehrhart.polytope import ConstraintPolytope, dilate_reflexive, from_graph, regularity


def test_path5_series_values():
    p = from_graph(linear_graph(5))
    assert [count_points(p, t) for t in range(6)] == [1, 13, 70, 246, 671, 1547]


def test_path4_series_values():
    p = from_graph(linear_graph(4))
    assert [count_points(p, t) for t in range(6)] == [1, 8, 31, 85, 190, 371]


def test_single_edge_t2():
    # hand enumeration: (0,0) (0,1) (0,2) (1,0) (1,1) (2,0)
    assert count_points(from_graph(linear_graph(2)), 2) == 6


def test_t_zero():
    p = from_graph(cycle_graph(4))
    assert count_points(p, 0) == 1
    assert count_points(p, 0, strict=True) == 0


def test_q_counts():
    p = from_graph(linear_graph(2))
    q = dilate_reflexive(p, regularity(p))
    assert count_points_Q(q, 0) == 1
    # triangle (-1,-1), (2,-1), (-1,2): naive scan of [-1, 2]^2
    scan = sum(1 for y in itertools.product(range(-1, 3), repeat=2) if y[0] + y[1] <= 1)
    assert scan == 10
    assert count_points_Q(q, 1) == scan
    assert count_points_Q(q, 1, strict=True) == 1


@pytest.mark.parametrize("g", [linear_graph(3), cycle_graph(4), complete_bipartite_graph(2, 2)])
def test_q_counts_match_naive(g):
    p = from_graph(g)
    q = dilate_reflexive(p, regularity(p))
    for t in range(4):
        assert count_points_Q(q, t) == naive_count_Q(q, t)
        assert count_points_Q(q, t, strict=True) == naive_count_Q(q, t, strict=True)
    bad = q.corrupted(0, 2)
    for t in range(3):
        assert count_points_Q(bad, t) == naive_count_Q(bad, t)
        assert count_points_Q(bad, t, strict=True) == naive_count_Q(bad, t, strict=True)


def test_weighted_graphs():
    assert count_weighted_graphs(linear_graph(5), 1) == 13
    assert count_weighted_graphs(Graph(1), 4) == 5
    assert count_weighted_graphs(Graph(2), 2) == 9
    g = Graph(4, [(1, 2), (2, 3)])
    assert count_weighted_graphs(g, 3) == count_points(from_graph(linear_graph(3)), 3) * 4


def test_count_table():
    p = from_graph(linear_graph(5))
    table = count_table(p, 5)
    assert table.values == [1, 13, 70, 246, 671, 1547]
    assert table.kind == "closed"
    assert table[3] == 246
    interior = count_table(p, 2, strict=True)
    assert interior.values == [0, 0, 0]


def test_count_table_workers_agree():
    p = from_graph(complete_bipartite_graph(2, 3))
    assert count_table(p, 6, workers=3).values == count_table(p, 6).values
    assert count_points(p, 7, strict=True, workers=2) == count_points(p, 7, strict=True)


def test_raw_matrix_counts():
    # M = [1]: P = [0, 1]
    p = ConstraintPolytope([[1]])
    assert [count_points(p, t) for t in range(4)] == [1, 2, 3, 4]
    # nonunit coefficients
    p = ConstraintPolytope([[2, 1], [1, 3]])
    for t in range(6):
        assert count_points(p, t) == naive_count(p, t)
        assert count_points(p, t, strict=True) == naive_count(p, t, strict=True)


def test_count_box_negative_bounds():
    # |{-2 <= y <= 3, y1 + y2 <= 1}| by direct scan
    scan = sum(1 for y in itertools.product(range(-2, 4), repeat=2) if sum(y) <= 1)
    assert count_box([[1, 1]], [1], [-2, -2], [3, 3]) == scan


@st.composite
def bipartite_graphs(draw, max_d=5):
    a = draw(st.integers(min_value=1, max_value=max_d - 1))
    b = draw(st.integers(min_value=1, max_value=max_d - a))
    cross = [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)]
    edges = draw(st.lists(st.sampled_from(cross), unique=True, min_size=1))
    g = Graph(a + b, edges)
    core, _ = g.without_isolated()
    return core


@settings(max_examples=60, deadline=None)
@given(bipartite_graphs(), st.integers(min_value=0, max_value=4))
def test_pruned_matches_naive(g, t):
    p = from_graph(g)
    assert count_points(p, t) == naive_count(p, t)
    assert count_points(p, t, strict=True) == naive_count(p, t, strict=True)


@settings(max_examples=40, deadline=None)
@given(bipartite_graphs(max_d=6))
def test_monotone_and_interior_bounded(g):
    p = from_graph(g)
    closed = [count_points(p, t) for t in range(6)]
    interior = [count_points(p, t, strict=True) for t in range(6)]
    assert closed == sorted(closed)
    assert all(i <= c for i, c in zip(interior, closed))


@settings(max_examples=30, deadline=None)
@given(bipartite_graphs(max_d=4), bipartite_graphs(max_d=4), st.integers(min_value=0, max_value=4))
def test_product_law(g, h, t):
    union = from_graph(disjoint_union(g, h))
    assert count_points(union, t) == count_points(from_graph(g), t) * count_points(from_graph(h), t)


@settings(max_examples=40, deadline=None)
@given(bipartite_graphs(max_d=6), st.randoms(use_true_random=False), st.integers(min_value=0, max_value=5))
def test_relabeling_invariance(g, rnd, t):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    h = g.relabel(dict(zip(g.vertices, perm)))
    assert count_points(from_graph(h), t) == count_points(from_graph(g), t)
    assert count_points(from_graph(h), t, strict=True) == count_points(from_graph(g), t, strict=True)


def test_odd_cycle_counts_match_naive():
    for n in (3, 5):
        p = from_graph(cycle_graph(n))
        for t in range(5):
            assert count_points(p, t) == naive_count(p, t)
