"""Path-graph Ehrhart data: transfer matrices, Euler numbers, continued fractions, OEIS arrays.

For the path 1 - 2 - ... - n the weights n_1..n_n in {0..t} only interact
between neighbours, so L(t) is the total of the (n-1)-th power of the
(t+1) x (t+1) matrix T with T[i][j] = 1 iff i + j <= t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, lcm
from typing import List, Sequence, Tuple, Union

from .ehrhart import HStarVector, hstar_from_counts

Matrix = List[List[int]]


def transfer_matrix(t: int) -> Matrix:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return [[1 if i + j <= t else 0 for j in range(t + 1)] for i in range(t + 1)]


def matrix_total(m: Sequence[Sequence[int]]) -> int:
    return sum(sum(row) for row in m)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def path_count(n: int, t: int) -> int:
    """L_{P(L_n)}(t) as s(T_t^(n-1))."""
    if n < 1:
        raise ValueError("path_count needs n >= 1")
    if t < 0:
        raise ValueError("t must be nonnegative")
    # s(T^(n-1)) = 1^T T^(n-1) 1, so propagate a vector instead of powering
    m = transfer_matrix(t)
    vec = [1] * (t + 1)
    for _ in range(n - 1):
        vec = [sum(a * v for a, v in zip(row, vec)) for row in m]
    return sum(vec)


def path_count_by_power(n: int, t: int) -> int:
    """Same value as path_count, via the explicit matrix power."""
    if n < 1:
        raise ValueError("path_count needs n >= 1")
    m = transfer_matrix(t)
    power = [[int(i == j) for j in range(t + 1)] for i in range(t + 1)]
    for _ in range(n - 1):
        power = _matmul(power, m)
    return matrix_total(power)


def path_counts(n: int, t_max: int) -> List[int]:
    if n == 0:
        return [1] * (t_max + 1)
    return [path_count(n, t) for t in range(t_max + 1)]


def path_hstar(n: int) -> HStarVector:
    """h_n(z) for the path graph on n vertices, counts taken from the transfer matrix."""
    return hstar_from_counts(path_counts(n, n), n)


def euler_numbers(n_max: int) -> List[int]:
    """Zigzag numbers E_0..E_{n_max} from 2 E_{n+1} = sum_k C(n, k) E_k E_{n-k}, n >= 1."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    e = [1, 1][: n_max + 1]
    for n in range(1, n_max):
        total = sum(comb(n, k) * e[k] * e[n - k] for k in range(n + 1))
        e.append(total // 2)
    return e


def volume_check(n: int) -> Fraction:
    """vol(P(L_n)) = h_n(1) / n!."""
    if n < 2:
        raise ValueError("volume_check needs n >= 2")
    return Fraction(path_hstar(n).at_one(), factorial(n))


@dataclass(frozen=True)
class IntegerPolynomial:
    """Integer coefficients in ascending degree; the zero polynomial is ()."""

    coefficients: Tuple[int, ...]

    def __init__(self, coefficients: Sequence[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "IntegerPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntegerPolynomial([self[i] + other[i] for i in range(n)])

    def __neg__(self) -> "IntegerPolynomial":
        return IntegerPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        if not self or not other:
            return IntegerPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntegerPolynomial(out)

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ONE = IntegerPolynomial([1])
Y = IntegerPolynomial([0, 1])


def _fraction_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _primitive(c: Sequence[Fraction]) -> List[int]:
    den = 1
    for x in c:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def polynomial_gcd(a: IntegerPolynomial, b: IntegerPolynomial) -> IntegerPolynomial:
    """Primitive gcd over Q with positive leading coefficient."""
    x = [Fraction(c) for c in a.coefficients]
    y = [Fraction(c) for c in b.coefficients]
    while y:
        _, r = _fraction_divmod(x, y)
        x, y = y, r
    if not x:
        return IntegerPolynomial()
    g = _primitive(x)
    if g[-1] < 0:
        g = [-c for c in g]
    return IntegerPolynomial(g)


def _exact_div(a: IntegerPolynomial, b: IntegerPolynomial) -> IntegerPolynomial:
    q, r = _fraction_divmod([Fraction(c) for c in a.coefficients], [Fraction(c) for c in b.coefficients])
    if r or any(x.denominator != 1 for x in q):
        raise ArithmeticError("polynomial division is not exact over the integers")
    return IntegerPolynomial([int(x) for x in q])


def _reduce(num: IntegerPolynomial, den: IntegerPolynomial) -> Tuple[IntegerPolynomial, IntegerPolynomial]:
    g = polynomial_gcd(num, den)
    if g.degree > 0 or (g and g[0] != 1):
        num, den = _exact_div(num, g), _exact_div(den, g)
    content = 0
    for c in num.coefficients + den.coefficients:
        content = gcd(content, c)
    if content > 1:
        num = IntegerPolynomial([c // content for c in num.coefficients])
        den = IntegerPolynomial([c // content for c in den.coefficients])
    if den[0] < 0:
        num, den = -num, -den
    return num, den


@dataclass(frozen=True)
class RationalSeries:
    numerator: IntegerPolynomial
    denominator: IntegerPolynomial

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise ZeroDivisionError("denominator has zero constant term; no power series")

    def reduced(self) -> "RationalSeries":
        return RationalSeries(*_reduce(self.numerator, self.denominator))

    def expand(self, order: int) -> List[Union[int, Fraction]]:
        return series_expand(self, order)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def series_expand(r: RationalSeries, order: int) -> List[Union[int, Fraction]]:
    """First order+1 coefficients of numerator/denominator as a power series.

    Integers when the denominator's constant term is +-1; otherwise any
    non-integral coefficient is returned as a Fraction.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num, den = r.numerator, r.denominator
    d0 = den[0]
    out: List[Fraction] = []
    for n in range(order + 1):
        acc = Fraction(num[n]) - sum(den[i] * out[n - i] for i in range(1, min(n, den.degree) + 1))
        out.append(acc / d0)
    return [int(c) if c.denominator == 1 else c for c in out]


def continued_fraction(terms: Sequence[IntegerPolynomial]) -> RationalSeries:
    """[a_0, ..., a_r] = 1 / (a_0 + 1 / (a_1 + ... + 1 / a_r)), reduced."""
    if not terms:
        raise ValueError("continued fraction needs at least one term")
    num, den = terms[-1], ONE
    for a in reversed(terms[:-1]):
        num, den = a * num + den, num
    # the whole expression is the reciprocal of the last value built
    return RationalSeries(*_reduce(den, num))


def column_terms(m: int) -> List[IntegerPolynomial]:
    """Terms of k_m(y): m + 1 entries alternating -y, y, ... followed by 1."""
    return [(-Y if i % 2 == 0 else Y) for i in range(m + 1)] + [ONE]


def column_generating_function(m: int) -> RationalSeries:
    return continued_fraction(column_terms(m))


def a050446_array(rows: int, cols: int) -> List[List[int]]:
    """entry[n][t] = L_{P(L_n)}(t); row n = 0 is the point polytope (all ones)."""
    return [path_counts(n, cols - 1) for n in range(rows)]


def a205497_array(max_n: int) -> List[List[int]]:
    """Square array whose anti-diagonal s holds the coefficients of h_{s+2}.

    entry[i][j] = [z^i] h_{i+j+2}(z); the array has side max_n // 2 so that
    every entry needs h_n with n <= max_n.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    size = max_n // 2
    hs = {n: path_hstar(n).coefficients for n in range(2, 2 * size + 1)}
    return [[hs[i + j + 2][i] for j in range(size)] for i in range(size)]


def anti_diagonal(array: Sequence[Sequence[int]], s: int) -> List[int]:
    return [array[i][s - i] for i in range(s + 1) if i < len(array) and s - i < len(array[i])]


def render_table(array: Sequence[Sequence[int]]) -> str:
    """Right-aligned columns, comma separated, one row per line."""
    width = max((len(str(x)) for row in array for x in row), default=1)
    return "\n".join(", ".join(str(x).rjust(width) for x in row) for row in array)
