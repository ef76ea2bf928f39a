"""h*-vectors, palindromicity, and numeric certificates built on exact counts.

All arithmetic is integer or ``Fraction``.  The checks return ``CheckResult``
objects that are truthy when they pass and keep one row per probed dilation
so that a failure always comes with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple, Union

from .lattice import CountTable, count_points, count_points_Q
from .polytope import ConstraintPolytope, DilatedReflexive, RegularityCertificate, regularity


class QuasiPolynomialError(ValueError):
    """Counts do not follow a degree-d polynomial, so no h*-vector is certified."""

    def __init__(self, witness: Tuple[int, int, int]):
        t, predicted, actual = witness
        self.witness = witness
        super().__init__(
            f"quasi-polynomial detected: L({t}) predicted {predicted} from t = 0..d, "
            f"enumeration gives {actual}"
        )


@dataclass(frozen=True)
class HStarVector:
    coefficients: Tuple[int, ...]
    d: int

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, j):
        return self.coefficients[j]

    def trimmed(self) -> Tuple[int, ...]:
        c = list(self.coefficients)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return tuple(c)

    def at_one(self) -> int:
        return sum(self.coefficients)

    def normalized_volume(self) -> int:
        return self.at_one()

    def volume(self) -> Fraction:
        return Fraction(self.at_one(), factorial(self.d))

    def is_nonnegative(self) -> bool:
        return all(h >= 0 for h in self.coefficients)


@dataclass(frozen=True)
class PalindromeReport:
    is_palindromic: bool
    effective_degree: int
    expected_degree: Optional[int]
    vanishes_above_expected: Optional[bool] = None
    # set when d - k + 1 < 0, where the degree claim says nothing
    degenerate: bool = False

    @property
    def degree_matches(self) -> bool:
        return self.expected_degree is not None and self.effective_degree == self.expected_degree


@dataclass
class CheckResult:
    name: str
    passed: bool
    # (t, left-hand value, right-hand value)
    rows: List[Tuple[int, int, int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def witness(self) -> Optional[Tuple[int, int, int]]:
        for row in self.rows:
            if row[1] != row[2]:
                return row
        return None


def _values(counts: Union[CountTable, Sequence[int]]) -> List[int]:
    if isinstance(counts, CountTable):
        if counts.kind != "closed":
            raise ValueError("h*-extraction needs closed counts")
        ts = [t for t, _ in counts.entries]
        if ts != list(range(len(ts))):
            raise ValueError("count table must cover t = 0, 1, 2, ... without gaps")
        return counts.values
    return [int(c) for c in counts]


def hstar_from_counts(counts: Union[CountTable, Sequence[int]], d: int) -> HStarVector:
    """Numerator of sum L(t) z^t = h(z) / (1 - z)^(d+1) from L(0..d).

    h_j = sum_{i=0..j} (-1)^i C(d+1, i) L(j - i)
    """
    values = _values(counts)
    if len(values) < d + 1:
        raise ValueError(f"need counts for t = 0..{d}, got {len(values)} values")
    if values[0] != 1:
        raise ValueError(f"L(0) must be 1, got {values[0]}")
    h = [
        sum((-1) ** i * comb(d + 1, i) * values[j - i] for i in range(j + 1))
        for j in range(d + 1)
    ]
    return HStarVector(tuple(h), d)


def counts_from_hstar(h: HStarVector, t: int) -> int:
    """L(t) = sum_j h_j C(t - j + d, d)."""
    d = h.d
    return sum(hj * comb(t - j + d, d) for j, hj in enumerate(h) if t - j >= 0)


def palindrome_check(h: HStarVector, k: Optional[int]) -> PalindromeReport:
    c = h.trimmed()
    eff = len(c) - 1
    palindromic = c == c[::-1]
    if k is None:
        return PalindromeReport(palindromic, eff, None)
    raw = h.d - k + 1
    expected = max(0, raw)
    vanish = all(x == 0 for x in h.coefficients[expected + 1:])
    return PalindromeReport(palindromic, eff, expected, vanish, degenerate=raw < 0)


# exact polynomial helpers (ascending coefficient lists)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class InterpolatedEhrhart:
    coefficients: Tuple[Fraction, ...]

    def __call__(self, t: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]


def interpolate(values: Sequence[int]) -> InterpolatedEhrhart:
    """Lagrange interpolation through (t, values[t]) for t = 0..n-1, in exact rationals."""
    n = len(values)
    coeffs = [Fraction(0)] * n
    for i, yi in enumerate(values):
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j != i:
                basis = _poly_mul(basis, [Fraction(-j), Fraction(1)])
                denom *= i - j
        for m, b in enumerate(basis):
            coeffs[m] += b * yi / denom
    return InterpolatedEhrhart(tuple(coeffs))


def ehrhart_polynomial(p: ConstraintPolytope) -> InterpolatedEhrhart:
    d = p.dimension
    return interpolate([count_points(p, t) for t in range(d + 1)])


def interior_shift_check(p: ConstraintPolytope, cert: RegularityCertificate, t_max: Optional[int] = None) -> CheckResult:
    """L_{P°}(t) = 0 for t < k and L_P(t - k) for t >= k, at t = 0..t_max."""
    k = cert.k
    if t_max is None:
        t_max = p.dimension + k + 2
    if t_max < k:
        raise ValueError(f"t_max must be at least k = {k}")
    rows = []
    for t in range(t_max + 1):
        expected = 0 if t < k else count_points(p, t - k)
        rows.append((t, count_points(p, t, strict=True), expected))
    return CheckResult("interior-shift", all(a == b for _, a, b in rows), rows)


def reflexive_shift_check(q: DilatedReflexive, t_max: int = 4) -> CheckResult:
    """|tQ° ∩ Z^d| = |(t-1)Q ∩ Z^d| for t = 1..t_max."""
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    rows = [(t, count_points_Q(q, t, strict=True), count_points_Q(q, t - 1)) for t in range(1, t_max + 1)]
    return CheckResult("reflexive-shift", all(a == b for _, a, b in rows), rows)


def reciprocity_check(p: ConstraintPolytope, t_probe: int = 3) -> CheckResult:
    """(-1)^d L(-t) from the interpolated polynomial equals the interior count at t."""
    if t_probe < 1:
        raise ValueError("t_probe must be at least 1")
    d = p.dimension
    poly = ehrhart_polynomial(p)
    rows = []
    for t in range(1, t_probe + 1):
        value = (-1) ** d * poly(-t)
        lhs = value.numerator if value.denominator == 1 else value
        rows.append((t, lhs, count_points(p, t, strict=True)))
    return CheckResult("reciprocity", all(a == b for _, a, b in rows), rows)


def verify_polynomiality(p: ConstraintPolytope, extra: int = 2) -> CheckResult:
    """Compare L(d+1..d+extra) predicted from L(0..d) with enumeration."""
    d = p.dimension
    h = hstar_from_counts([count_points(p, t) for t in range(d + 1)], d)
    rows = [(t, counts_from_hstar(h, t), count_points(p, t)) for t in range(d + 1, d + extra + 1)]
    return CheckResult("polynomiality", all(a == b for _, a, b in rows), rows)


@dataclass(frozen=True)
class EhrhartSummary:
    counts: Tuple[int, ...]
    hstar: HStarVector
    palindrome: PalindromeReport
    k: Optional[int]

    def to_json(self) -> dict:
        return {
            "hstar": list(self.hstar.trimmed()),
            "d": self.hstar.d,
            "k": self.k,
            "palindromic": self.palindrome.is_palindromic,
            "degree": self.palindrome.effective_degree,
            "expected_degree": self.palindrome.expected_degree,
            "h_at_1": self.hstar.at_one(),
            "volume": str(self.hstar.volume()),
        }


def certify_counts(counts: Sequence[int], d: int, k: Optional[int]) -> EhrhartSummary:
    """h*-vector from L(0..d+2), refused with QuasiPolynomialError unless L(d+1), L(d+2) agree."""
    counts = list(counts)
    if len(counts) < d + 3:
        raise ValueError(f"need counts for t = 0..{d + 2}")
    h = hstar_from_counts(counts[: d + 1], d)
    for t in (d + 1, d + 2):
        predicted = counts_from_hstar(h, t)
        if predicted != counts[t]:
            raise QuasiPolynomialError((t, predicted, counts[t]))
    return EhrhartSummary(tuple(counts[: d + 1]), h, palindrome_check(h, k), k)


def certified_hstar(p: ConstraintPolytope, workers: Optional[int] = None) -> EhrhartSummary:
    d = p.dimension
    counts = [count_points(p, t, workers=workers) for t in range(d + 3)]
    cert = regularity(p)
    return certify_counts(counts, d, cert.k if cert else None)
