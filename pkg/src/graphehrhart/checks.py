"""Seeded instance generation and the check suites behind ``graphehrhart check``."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, Union

from .ehrhart import (
    QuasiPolynomialError,
    certified_hstar,
    interior_shift_check,
    reciprocity_check,
    reflexive_shift_check,
)
from .graph_model import Graph, Hypergraph, bipartition
from .polytope import ConstraintPolytope, dilate_reflexive, from_graph, from_hypergraph, regularity

CHECKS = ("theorem3", "reciprocity", "reflexive-shift", "palindrome")
ALIASES = {"interior-shift": "theorem3"}

THEOREM = "theorem"
CONJECTURE = "conjecture (hypergraph extension)"
UNSUPPORTED = "hypotheses unmet"


def random_bipartite_graph(rng: random.Random, d: int, p: float = 0.5) -> Graph:
    """Random bipartite graph on d >= 2 vertices with no isolated vertex.

    Side A is 1..a with a uniform in 1..d-1, side B the rest.  Each cross
    edge appears with probability p; a vertex left with degree 0 gets one
    uniformly chosen cross edge.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    a = rng.randint(1, d - 1)
    side_a = list(range(1, a + 1))
    side_b = list(range(a + 1, d + 1))
    edges = {(i, j) for i in side_a for j in side_b if rng.random() < p}
    for v in range(1, d + 1):
        if not any(v in e for e in edges):
            w = rng.choice(side_b if v <= a else side_a)
            edges.add((min(v, w), max(v, w)))
    return Graph(d, edges)


def random_connected_bipartite_graph(rng: random.Random, d: int, p: float = 0.5) -> Graph:
    """random_bipartite_graph, redrawn from the same stream until connected."""
    while True:
        g = random_bipartite_graph(rng, d, p)
        if g.is_connected():
            return g


def random_instances(seed: int, trials: int, min_d: int = 3, max_d: int = 8) -> List[Graph]:
    """Trial i draws from its own stream seeded by (seed, i), so trials are independent."""
    if not 2 <= min_d <= max_d:
        raise ValueError("need 2 <= min_d <= max_d")
    graphs = []
    for i in range(trials):
        rng = random.Random(f"{seed}/{i}")
        d = rng.randint(min_d, max_d)
        graphs.append(random_connected_bipartite_graph(rng, d))
    return graphs


@dataclass
class CheckReport:
    check: str
    instance: str
    status: str
    passed: bool
    witness: Optional[str] = None
    detail: Optional[str] = None
    elapsed_ms: Optional[float] = None

    def to_json(self, timing: bool = True) -> dict:
        out = asdict(self)
        if not timing:
            out.pop("elapsed_ms")
        return out


Subject = Union[Graph, Hypergraph, ConstraintPolytope]


def describe(subject: Subject, label: str = "") -> str:
    if isinstance(subject, Graph):
        edges = " ".join(f"{i}-{j}" for i, j in subject.edges)
        body = f"graph d={subject.vertex_count} edges=[{edges}]"
    elif isinstance(subject, Hypergraph):
        edges = " ".join("-".join(map(str, e)) for e in subject.edges)
        body = f"hypergraph d={subject.vertex_count} r={subject.uniformity} edges=[{edges}]"
    else:
        body = f"matrix {subject.rows}x{subject.dimension} rows={[list(r) for r in subject.matrix]}"
    return f"{label} {body}" if label else body


def _status(subject: Subject) -> str:
    if isinstance(subject, Graph):
        return THEOREM if bipartition(subject) is not None else UNSUPPORTED
    if isinstance(subject, Hypergraph):
        return CONJECTURE
    return THEOREM if regularity(subject) is not None else UNSUPPORTED


def _polytope(subject: Subject) -> ConstraintPolytope:
    if isinstance(subject, Graph):
        return from_graph(subject)
    if isinstance(subject, Hypergraph):
        return from_hypergraph(subject)
    return subject


def _row_witness(result) -> Optional[str]:
    w = result.witness
    if w is None:
        return None
    t, lhs, rhs = w
    return f"t={t}: {lhs} != {rhs}"


def _rows_text(result) -> str:
    return "; ".join(f"t={t}: {a}={b}" if a == b else f"t={t}: {a}!={b}" for t, a, b in result.rows)


def _palindrome(p: ConstraintPolytope):
    try:
        summary = certified_hstar(p)
    except QuasiPolynomialError as exc:
        return False, str(exc), None
    h = summary.hstar
    rep = summary.palindrome
    detail = f"h*=({', '.join(map(str, h.trimmed()))}) degree={rep.effective_degree} expected={rep.expected_degree}"
    c = h.trimmed()
    for j in range(len(c)):
        if c[j] != c[-1 - j]:
            return False, f"h[{j}]={c[j]} != h[{len(c) - 1 - j}]={c[-1 - j]}", detail
    if not rep.degree_matches:
        return False, f"degree {rep.effective_degree} != expected {rep.expected_degree}", detail
    if not rep.vanishes_above_expected:
        return False, f"nonzero coefficient above degree {rep.expected_degree}", detail
    neg = [j for j, x in enumerate(h.coefficients) if x < 0]
    if neg:
        return False, f"h[{neg[0]}]={h[neg[0]]} < 0", detail
    return True, None, detail


def run_check(name: str, subject: Subject, label: str = "") -> CheckReport:
    name = ALIASES.get(name, name)
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}")
    start = time.perf_counter()
    status = _status(subject)
    witness = detail = None
    try:
        p = _polytope(subject)
        cert = regularity(p)
        if name == "palindrome":
            passed, witness, detail = _palindrome(p)
        elif cert is None:
            passed, witness = False, "row sums of M differ; no regularity constant"
        elif name == "theorem3":
            res = interior_shift_check(p, cert)
            passed, witness, detail = res.passed, _row_witness(res), _rows_text(res)
        elif name == "reflexive-shift":
            res = reflexive_shift_check(dilate_reflexive(p, cert), 4)
            passed, witness, detail = res.passed, _row_witness(res), _rows_text(res)
        else:
            res = reciprocity_check(p, 3)
            passed, witness, detail = res.passed, _row_witness(res), _rows_text(res)
    except ValueError as exc:
        passed, witness = False, str(exc)
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(name, describe(subject, label), status, passed, witness, detail, round(elapsed, 3))


def _run_one(args) -> List[CheckReport]:
    names, subject, label = args
    return [run_check(n, subject, label) for n in names]


def run_suite(
    names: Sequence[str], subjects: Sequence[Subject], labels: Optional[Sequence[str]] = None, workers: Optional[int] = None
) -> List[CheckReport]:
    """Run every check on every subject; report order is (subject, check) regardless of workers."""
    labels = list(labels) if labels is not None else [""] * len(subjects)
    jobs = [(list(names), s, lab) for s, lab in zip(subjects, labels)]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_one, jobs))
    else:
        chunks = [_run_one(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]
