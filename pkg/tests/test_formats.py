import json

import pytest

from graphehrhart.formats import (
    ParseError,
    graph_to_edge_list,
    load_instance,
    matrix_to_json,
    parse_edge_list,
    parse_hypergraph,
    parse_matrix_csv,
    parse_matrix_json,
)
from graphehrhart.graph_model import Graph, Hypergraph, linear_graph
from graphehrhart.polytope import ConstraintPolytope, from_graph


def test_edge_list_round_trip():
    g = linear_graph(5)
    assert parse_edge_list(graph_to_edge_list(g)) == g


def test_edge_list_comments_and_blank_lines():
    text = "# path\n3\n\n1 2  # first\n2 3\n"
    assert parse_edge_list(text) == linear_graph(3)


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("5\n0 3\n", 2, "outside 1..5"),
        ("3\n1 2\n1 x\n", 3, "expected integers"),
        ("3\n1 2 3\n", 2, "exactly 2"),
        ("3\n1 2\n2 1\n", 3, "duplicate"),
        ("3\n2 2\n", 2, "repeats"),
        ("3 4\n", 1, "header"),
    ],
)
def test_edge_list_errors(text, line, message):
    with pytest.raises(ParseError, match=message) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_hypergraph():
    h = parse_hypergraph("4 3\n1 2 3\n2 3 4\n")
    assert h == Hypergraph(4, 3, [(1, 2, 3), (2, 3, 4)])
    with pytest.raises(ParseError, match="exactly 3"):
        parse_hypergraph("4 3\n1 2\n")


def test_matrix_formats():
    p = parse_matrix_csv("1,1,0\n0,1,1\n")
    assert p == from_graph(linear_graph(3))
    assert parse_matrix_json(matrix_to_json(p)) == p
    assert parse_matrix_json('{"rows": 1, "cols": 1, "data": [[1]]}') == ConstraintPolytope([[1]])
    with pytest.raises(ParseError, match="nonnegative"):
        parse_matrix_csv("1,-1\n")
    with pytest.raises(ParseError, match="entries"):
        parse_matrix_csv("1,1\n1\n")
    with pytest.raises(ParseError, match="does not match"):
        parse_matrix_json('{"rows": 2, "cols": 1, "data": [[1]]}')


def test_load_instance_auto(tmp_path):
    (tmp_path / "g.txt").write_text("3\n1 2\n2 3\n")
    (tmp_path / "h.txt").write_text("4 3\n1 2 3\n")
    (tmp_path / "m.csv").write_text("1,1\n")
    (tmp_path / "m.json").write_text(json.dumps({"rows": 1, "cols": 2, "data": [[1, 1]]}))
    assert isinstance(load_instance(tmp_path / "g.txt"), Graph)
    assert isinstance(load_instance(tmp_path / "h.txt"), Hypergraph)
    assert load_instance(tmp_path / "m.csv") == load_instance(tmp_path / "m.json")
    with pytest.raises(ParseError):
        load_instance(tmp_path / "missing.txt")
