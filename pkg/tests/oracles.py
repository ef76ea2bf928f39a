"""Independent oracles shared by the test modules."""

from fractions import Fraction
from math import factorial

from graphehrhart.graph_model import all_graphs, bipartition


def sec_plus_tan_numbers(n_max):
    """n! [z^n] (sec z + tan z), from exact Taylor series of sin and cos."""
    cos = [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 0 else Fraction(0) for n in range(n_max + 1)]
    sin = [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 1 else Fraction(0) for n in range(n_max + 1)]
    sec = []
    for n in range(n_max + 1):
        sec.append(Fraction(1 if n == 0 else 0) - sum(cos[i] * sec[n - i] for i in range(1, n + 1)))
    tan = [sum(sin[i] * sec[n - i] for i in range(n + 1)) for n in range(n_max + 1)]
    return [factorial(n) * (sec[n] + tan[n]) for n in range(n_max + 1)]


def bipartite_fixture_graphs(max_d):
    """Every labeled bipartite graph without isolated vertices on 2..max_d vertices."""
    return [
        g
        for d in range(2, max_d + 1)
        for g in all_graphs(d)
        if not g.isolated_vertices() and bipartition(g) is not None
    ]
