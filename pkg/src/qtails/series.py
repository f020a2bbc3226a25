"""Exact truncated power-series arithmetic in q.

Everything downstream (partition counters, pentagonal tails, theta
expansions) is built on :class:`CoefficientSeries`: a polynomial in q
truncated at an explicit order N, with arbitrary-precision integer
coefficients.  All operations are exact and return fresh immutable
values; convolution is the schoolbook O(N^2) algorithm, which is plenty
for desk-scale truncation orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt


@dataclass(frozen=True)
class CoefficientSeries:
    """Power series in q truncated at order N (inclusive).

    ``coeffs[n]`` is the coefficient of q^n; ``len(coeffs) == N + 1``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> CoefficientSeries:
        if order > self.order:
            raise ValueError(f"cannot extend truncation {self.order} to {order}")
        return CoefficientSeries(self.coeffs[: order + 1])

    def scale(self, c: int) -> CoefficientSeries:
        return CoefficientSeries(tuple(c * v for v in self.coeffs))

    def __neg__(self) -> CoefficientSeries:
        return self.scale(-1)

    def __add__(self, other: CoefficientSeries) -> CoefficientSeries:
        n = min(self.order, other.order)
        return CoefficientSeries(
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
        )

    def __sub__(self, other: CoefficientSeries) -> CoefficientSeries:
        return self + (-other)

    def __mul__(self, other: CoefficientSeries) -> CoefficientSeries:
        return mul(self, other)


def zero(order: int) -> CoefficientSeries:
    return CoefficientSeries((0,) * (order + 1))


def one(order: int) -> CoefficientSeries:
    return CoefficientSeries((1,) + (0,) * order)


def monomial(coefficient: int, exponent: int, order: int) -> CoefficientSeries:
    """c * q^e truncated at ``order`` (the zero series if e > order)."""
    c = [0] * (order + 1)
    if 0 <= exponent <= order:
        c[exponent] = coefficient
    return CoefficientSeries(tuple(c))


def mul(s: CoefficientSeries, t: CoefficientSeries) -> CoefficientSeries:
    """Exact product, truncated at the smaller of the two orders."""
    n = min(s.order, t.order)
    out = [0] * (n + 1)
    for i, a in enumerate(s.coeffs[: n + 1]):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            b = t.coeffs[j]
            if b:
                out[i + j] += a * b
    return CoefficientSeries(tuple(out))


def div_one_minus_qa(s: CoefficientSeries, a: int) -> CoefficientSeries:
    """s / (1 - q^a), via the stride recurrence t_n = s_n + t_{n-a}."""
    if a < 1:
        raise ValueError("divisor exponent must be >= 1")
    out = list(s.coeffs)
    for n in range(a, len(out)):
        out[n] += out[n - a]
    return CoefficientSeries(tuple(out))


def mul_one_minus_qa(s: CoefficientSeries, a: int) -> CoefficientSeries:
    """s * (1 - q^a), truncated at the order of s."""
    if a < 1:
        raise ValueError("factor exponent must be >= 1")
    out = list(s.coeffs)
    for n in range(len(out) - 1, a - 1, -1):
        out[n] -= out[n - a]
    return CoefficientSeries(tuple(out))


def pochhammer(
    start: int, step: int, count: int | None, order: int
) -> CoefficientSeries:
    """Truncation of prod_{0 <= j < count} (1 - q^{start + j*step}).

    ``count=None`` means the infinite product; factors whose exponent
    exceeds the truncation order are identically 1 and are skipped.
    """
    if start < 1 or step < 1:
        raise ValueError("start and step must be >= 1")
    if count is not None and count < 0:
        raise ValueError("count must be >= 0")
    s = one(order)
    j = 0
    while count is None or j < count:
        e = start + j * step
        if e > order:
            break
        s = mul_one_minus_qa(s, e)
        j += 1
    return s


def pentagonal(j: int) -> int:
    """The generalized pentagonal exponent j(3j+1)/2 for j >= 0."""
    return j * (3 * j + 1) // 2


def pentagonal_tail(k: int, order: int) -> CoefficientSeries:
    """sum_{j >= k} (-1)^{j-k} q^{j(3j+1)/2} (1 - q^{2j+1}), truncated.

    ``k=0`` gives the full alternating sum, which equals the Euler
    product (q;q)_infty.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    out = [0] * (order + 1)
    j = k
    while pentagonal(j) <= order:
        sign = 1 if (j - k) % 2 == 0 else -1
        out[pentagonal(j)] += sign
        e2 = j * (3 * j + 5) // 2 + 1
        if e2 <= order:
            out[e2] -= sign
        j += 1
    return CoefficientSeries(tuple(out))


def pentagonal_partial(k: int, order: int) -> CoefficientSeries:
    """The complementary head sum_{0 <= j < k} (-1)^j q^{g_j} (1 - q^{2j+1})."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = [0] * (order + 1)
    for j in range(k):
        if pentagonal(j) > order:
            break
        sign = 1 if j % 2 == 0 else -1
        out[pentagonal(j)] += sign
        e2 = j * (3 * j + 5) // 2 + 1
        if e2 <= order:
            out[e2] -= sign
    return CoefficientSeries(tuple(out))


def theta_jtp(i: int, d: int, order: int) -> CoefficientSeries:
    """sum_{n in Z} (-1)^n q^{d*binom(n,2) + i*n}, truncated.

    By the Jacobi triple product this equals (q^i, q^{d-i}, q^d; q^d)_infty
    whenever 1 <= i < d.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    out = [0] * (order + 1)
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            e = d * (n * (n - 1) // 2) + i * n
            if e < 0:
                raise ValueError(f"negative exponent at n={n} for (i,d)=({i},{d})")
            if e > order:
                break
            out[e] += 1 if n % 2 == 0 else -1
            n += direction
    return CoefficientSeries(tuple(out))


@dataclass(frozen=True)
class QPolynomial:
    """A polynomial in q with exact integer coefficients (not truncated)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def as_series(self, order: int) -> CoefficientSeries:
        c = [0] * (order + 1)
        for e, v in enumerate(self.coeffs[: order + 1]):
            c[e] = v
        return CoefficientSeries(tuple(c))


def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial [n, k]_q via the q-Pascal recurrence."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if k > n:
        return QPolynomial((0,))
    # row[j] holds the coefficient list of [m, j]_q for the current m
    row: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        new: list[list[int]] = []
        for j in range(m + 1):
            if j == 0 or j == m:
                new.append([1])
                continue
            # [m, j] = [m-1, j-1] + q^j [m-1, j]
            c = [0] * (j * (m - j) + 1)
            for e, v in enumerate(row[j - 1]):
                c[e] += v
            for e, v in enumerate(row[j]):
                c[e + j] += v
            new.append(c)
        row = new
    return QPolynomial(tuple(row[k]))


def partitions_into(parts: set[int] | frozenset[int], order: int) -> CoefficientSeries:
    """Partition counts with all parts drawn from ``parts`` (DP oracle)."""
    if not parts:
        raise ValueError("part set must be nonempty")
    if any(p < 1 for p in parts):
        raise ValueError("parts must be positive")
    c = [0] * (order + 1)
    c[0] = 1
    for a in sorted(parts):
        for n in range(a, order + 1):
            c[n] += c[n - a]
    return CoefficientSeries(tuple(c))
