"""Quadratic-plus-periodic decomposition of three-part partition counts.

For a pairwise-coprime triple (alpha, beta, gamma), the number
R(n) of partitions of n into parts from {alpha, beta, gamma} equals
a fixed quadratic in n plus a sequence of period alpha*beta*gamma
(Polya--Szego).  The periodic part is centred so that its sup-norm
bound is as small as possible; all constants are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .series import CoefficientSeries, div_one_minus_qa, one


@dataclass(frozen=True)
class Triple:
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        parts = (self.alpha, self.beta, self.gamma)
        if any(p < 1 for p in parts):
            raise ValueError("triple entries must be positive")
        if len(set(parts)) != 3:
            raise ValueError("triple entries must be distinct")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(parts[i], parts[j]) != 1:
                    raise ValueError(
                        f"triple {parts} is not pairwise coprime "
                        f"(gcd({parts[i]},{parts[j]}) > 1)"
                    )

    @property
    def parts(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def product(self) -> int:
        return self.alpha * self.beta * self.gamma

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta},{self.gamma})"


@dataclass(frozen=True)
class QuadraticProfile:
    """Exact decomposition R(n) = a n^2 + b n + c + periodic_table[n mod period].

    ``c`` is the centering constant (midpoint of the raw periodic part)
    and ``b_f`` its sup-norm bound: max(table) = +b_f, min(table) = -b_f.
    """

    triple: Triple
    a: Fraction
    b: Fraction
    c: Fraction
    period: int
    periodic_table: tuple[Fraction, ...]
    b_f: Fraction


class PeriodicityError(Exception):
    """The computed periodic part failed to repeat (internal inconsistency)."""


def r_series(t: Triple, order: int) -> CoefficientSeries:
    """Counts of partitions into parts from the triple, as a series."""
    s = one(order)
    for a in t.parts:
        s = div_one_minus_qa(s, a)
    return s


def periodic_profile(t: Triple) -> QuadraticProfile:
    period = t.product
    a = Fraction(1, 2 * period)
    b = (t.alpha + t.beta + t.gamma) * a
    r = r_series(t, 3 * period)
    raw = [r[n] - a * n * n - b * n for n in range(3 * period + 1)]
    for n in range(period, 3 * period + 1):
        if raw[n] != raw[n - period]:
            raise PeriodicityError(
                f"period {period} violated at n={n} for triple {t}"
            )
    window = raw[:period]
    c = Fraction(max(window) + min(window), 2)
    table = tuple(v - c for v in window)
    b_f = Fraction(max(window) - min(window), 2)
    assert max(table) == b_f and min(table) == -b_f
    return QuadraticProfile(
        triple=t, a=a, b=b, c=c, period=period, periodic_table=table, b_f=b_f
    )


def r_closed_form(p: QuadraticProfile, n: int) -> int:
    """R(n) from the profile; raises if the value is not an integer."""
    if n < 0:
        raise ValueError("n must be >= 0")
    v = p.a * n * n + p.b * n + p.c + p.periodic_table[n % p.period]
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral closed form at n={n} for {p.triple}")
    return int(v)


def r_zero_offsets(t: Triple) -> tuple[int, ...]:
    """All j >= 0 with R(j) = 0, i.e. j not representable by the triple.

    Any pair of the triple is coprime, so every j past the two smallest
    parts' Frobenius number x*y - x - y is representable; scanning one
    pair's bound covers the whole set.
    """
    x, y = sorted(t.parts)[:2]
    bound = max(x * y - x - y, 0)
    r = r_series(t, bound)
    return tuple(j for j in range(bound + 1) if r[j] == 0)
