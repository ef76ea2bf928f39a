import random
from fractions import Fraction

import pytest

from graphehrhart.graph_model import Graph, Hypergraph, linear_graph, tight_path_hypergraph
from graphehrhart.polytope import (
    ConstraintPolytope,
    IsolatedVertexError,
    RegularityCertificate,
    dilate_reflexive,
    from_graph,
    from_hypergraph,
    membership,
    regularity,
)


def test_from_graph_examples():
    p = from_graph(linear_graph(2))
    assert p.matrix == ((1, 1),)
    assert p.dimension == 2
    assert regularity(p).k == 3

    p5 = from_graph(linear_graph(5))
    assert (p5.rows, p5.dimension) == (4, 5)
    assert all(sum(r) == 2 for r in p5.matrix)
    assert regularity(p5) == RegularityCertificate(row_sum=2, k=3)


def test_isolated_vertex_rejected_with_name():
    star = Graph(5, [(1, 2), (1, 3), (1, 4)])
    with pytest.raises(IsolatedVertexError, match="vertex 5"):
        from_graph(star)


def test_from_hypergraph():
    p = from_hypergraph(Hypergraph(3, 3, [(1, 2, 3)]))
    assert p.matrix == ((1, 1, 1),)
    assert regularity(p).k == 4
    tp = from_hypergraph(tight_path_hypergraph(4, 3))
    assert (tp.rows, tp.dimension) == (2, 4)
    assert set(tp.row_sums()) == {3}


def test_two_uniform_hypergraph_matches_graph():
    edges = [(1, 2), (2, 3), (3, 4), (1, 4)]
    assert from_hypergraph(Hypergraph(4, 2, edges)) == from_graph(Graph(4, edges))


def test_regularity():
    assert regularity(ConstraintPolytope([[1, 1], [1, 1]])) == RegularityCertificate(2, 3)
    assert regularity(ConstraintPolytope([[1, 1, 0], [1, 1, 1]])) is None
    assert regularity(ConstraintPolytope([[1]])) == RegularityCertificate(1, 2)


def test_constraint_polytope_validation():
    with pytest.raises(ValueError):
        ConstraintPolytope([[1, -1]])
    with pytest.raises(ValueError):
        ConstraintPolytope([])
    with pytest.raises(IsolatedVertexError):
        ConstraintPolytope([[1, 0]])


def test_dilated_triangle():
    p = from_graph(linear_graph(2))
    q = dilate_reflexive(p, regularity(p))
    assert q.stacked_matrix() == ((1, 1), (-1, 0), (0, -1))
    for vertex in [(-1, -1), (2, -1), (-1, 2)]:
        assert q.contains(vertex)
        assert not q.contains(vertex, strict=True)
    for outside in [(-2, 0), (0, -2), (1, 1), (3, -1)]:
        assert not q.contains(outside)
    assert q.contains((0, 0), strict=True)


def test_dilate_rejects_wrong_certificate():
    p = from_graph(linear_graph(3))
    with pytest.raises(ValueError):
        dilate_reflexive(p, RegularityCertificate(3, 4))


@pytest.mark.parametrize("g", [linear_graph(2), linear_graph(5), Graph(4, [(1, 3), (1, 4), (2, 4)])])
def test_substitution_identity_on_random_rationals(g):
    # x in P iff kx - u in Q, by direct substitution on random rational points
    p = from_graph(g)
    cert = regularity(p)
    q = dilate_reflexive(p, cert)
    rng = random.Random(7)
    d = p.dimension
    inside = 0
    for _ in range(400):
        x = [Fraction(rng.randint(-4, 16), 12) for _ in range(d)]
        y = [cert.k * xi - 1 for xi in x]
        assert membership(p, x) == q.contains(y)
        inside += membership(p, x)
    assert inside > 0


def test_origin_interior_for_regular_polytopes():
    for p in [from_graph(linear_graph(4)), from_hypergraph(tight_path_hypergraph(5, 3)), ConstraintPolytope([[1]])]:
        q = dilate_reflexive(p, regularity(p))
        assert q.contains((0,) * p.dimension, strict=True)


def test_stacked_system_matches_block_form():
    p = from_graph(linear_graph(3))
    q = dilate_reflexive(p, regularity(p))
    rng = random.Random(3)
    for t in range(0, 4):
        for _ in range(200):
            y = [rng.randint(-5, 8) for _ in range(3)]
            direct = all(sum(a * v for a, v in zip(r, y)) <= t for r in p.matrix) and all(v >= -t for v in y)
            assert q.contains(y, t) == direct


def test_membership():
    p = from_graph(linear_graph(2))
    assert membership(p, (1, 0), 1)
    assert not membership(p, (1, 0), 1, strict=True)
    assert membership(p, (1, 1), 3, strict=True)
    assert membership(p, (0, 0), 0)
    assert not membership(p, (0, 0), 0, strict=True)
    assert not membership(p, (1, 0), 0)
    with pytest.raises(ValueError):
        membership(p, (1, 0, 0))
