"""Tail series of the pentagonal number theorem and their partition meaning.

tp_series divides the tail by just three factors (1-q^a)(1-q^b)(1-q^c);
gp_series divides by the full Euler product and is the generating
function of M_k(n): partitions where k is the least missing part and
parts above k outnumber parts below k.
"""

from __future__ import annotations

from math import comb

from .polya import Triple
from .series import (
    CoefficientSeries,
    div_one_minus_qa,
    monomial,
    one,
    pentagonal,
    pentagonal_partial,
    pentagonal_tail,
    q_binomial,
)

#: exhaustive enumeration refuses above this size unless told otherwise
BRUTEFORCE_CAP = 40


def tp_series(t: Triple, k: int, order: int) -> CoefficientSeries:
    """The tail over (1-q^alpha)(1-q^beta)(1-q^gamma); supported on n >= g_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = pentagonal_tail(k, order)
    for a in t.parts:
        s = div_one_minus_qa(s, a)
    return s


def gp_series(k: int, order: int) -> CoefficientSeries:
    """The tail over the full Euler product (q;q)_infty."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = pentagonal_tail(k, order)
    for a in range(1, order + 1):
        s = div_one_minus_qa(s, a)
    return s


def mk_series(k: int, order: int) -> CoefficientSeries:
    """sum_{n >= k} q^{binom(k,2) + (k+1)n} / (q;q)_n * qbinom(n-1, k-1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = CoefficientSeries((0,) * (order + 1))
    n = k
    while comb(k, 2) + (k + 1) * n <= order:
        e = comb(k, 2) + (k + 1) * n
        term = q_binomial(n - 1, k - 1).as_series(order)
        term = term * monomial(1, e, order)
        for a in range(1, min(n, order) + 1):
            term = div_one_minus_qa(term, a)
        total = total + term
        n += 1
    return total


def partition_iter(n: int, max_part: int | None = None):
    """Yields the partitions of n as nonincreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partition_iter(n - first, first):
            yield (first,) + rest


def mk_bruteforce(k: int, n: int, cap: int = BRUTEFORCE_CAP) -> int:
    """M_k(n) by exhaustive enumeration of the partitions of n."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    count = 0
    for parts in partition_iter(n):
        present = set(parts)
        if k in present or any(j not in present for j in range(1, k)):
            continue
        above = sum(1 for p in parts if p > k)
        below = sum(1 for p in parts if p < k)
        if above > below:
            count += 1
    return count


def check_am_identity(k: int, order: int) -> tuple[bool, int | None]:
    """Andrews--Merca: head/(q;q)_infty = 1 + (-1)^{k-1} * mk_series.

    Returns (True, None) on success, else (False, first mismatch index).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    lhs = pentagonal_partial(k, order)
    for a in range(1, order + 1):
        lhs = div_one_minus_qa(lhs, a)
    sign = 1 if (k - 1) % 2 == 0 else -1
    rhs = one(order) + mk_series(k, order).scale(sign)
    for n in range(order + 1):
        if lhs[n] != rhs[n]:
            return False, n
    return True, None
