import pytest

from graphehrhart.graph_model import Graph, complete_bipartite_graph, cycle_graph, linear_graph

ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def small_bipartite_graphs():
    return [
        linear_graph(2),
        linear_graph(3),
        linear_graph(4),
        cycle_graph(4),
        cycle_graph(6),
        complete_bipartite_graph(1, 3),
        complete_bipartite_graph(2, 3),
        Graph(5, [(1, 2), (3, 4), (4, 5)]),
    ]
