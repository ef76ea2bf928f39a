"""Exact Ehrhart data for graph polytopes and regular positive reflexive polytopes."""

from .ehrhart import (
    CheckResult,
    EhrhartSummary,
    HStarVector,
    InterpolatedEhrhart,
    PalindromeReport,
    QuasiPolynomialError,
    certified_hstar,
    certify_counts,
    counts_from_hstar,
    ehrhart_polynomial,
    hstar_from_counts,
    interior_shift_check,
    interpolate,
    palindrome_check,
    reciprocity_check,
    reflexive_shift_check,
    verify_polynomiality,
)
from .graph_model import (
    Bipartition,
    Graph,
    Hypergraph,
    bipartition,
    cycle_graph,
    hypergraph_incidence_matrix,
    incidence_matrix,
    linear_graph,
)
from .lattice import CountTable, count_points, count_points_Q, count_table, count_weighted_graphs
from .paths import (
    IntegerPolynomial,
    RationalSeries,
    a050446_array,
    a205497_array,
    continued_fraction,
    euler_numbers,
    path_count,
    series_expand,
    transfer_matrix,
    volume_check,
)
from .polytope import (
    ConstraintPolytope,
    DilatedReflexive,
    IsolatedVertexError,
    RegularityCertificate,
    dilate_reflexive,
    from_graph,
    from_hypergraph,
    membership,
    regularity,
)

__version__ = "0.1.0"
