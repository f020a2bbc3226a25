"""Exact bound tables deciding where tail positivity is automatic.

From a quadratic-plus-periodic profile we derive the rationals A_F, B_F
and the integer thresholds K (largest k needing a scan) and L(k)
(largest block index needing a scan within a fixed k).  The underlying
real roots k_F and l_F(k) are never materialized: their floors are
found by exact rational sign tests, which sidesteps any floating-point
fragility near integer roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polya import QuadraticProfile, r_closed_form
from .series import pentagonal


@dataclass(frozen=True)
class BoundTable:
    a_f: Fraction
    b_f_cap: Fraction
    k_cap: int
    l_caps: tuple[int, ...]  # L(k) for k = 1..k_cap


def bound_constants(p: QuadraticProfile) -> tuple[Fraction, Fraction]:
    """A_F = (B_f + 4a/3 + b/2)/a and B_F = (B_f + 4a/3 + |c|)/a."""
    a_f = (p.b_f + Fraction(4, 3) * p.a + p.b / 2) / p.a
    b_f_cap = (p.b_f + Fraction(4, 3) * p.a + abs(p.c)) / p.a
    return a_f, b_f_cap


def pfk_eval(p: QuadraticProfile, k: int, l: int) -> Fraction:
    """The block quadratic P_F^k(l); positivity of the tail is automatic
    in every block with P_F^k > 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a_f, b_f_cap = bound_constants(p)
    kk = 3 * k - 2
    return (
        Fraction(l) * l
        + 2 * (k - Fraction(1, 6) - a_f / kk) * l
        - (k + Fraction(2, 3) + b_f_cap / kk)
    )


def l_cap(p: QuadraticProfile, k: int) -> int:
    """L(k) = max{l >= 0 : P_F^k(l) <= 0}, by upward integer search.

    P_F^k(0) < 0 always, so the search is well defined.
    """
    l = 0
    while pfk_eval(p, k, l + 1) <= 0:
        l += 1
    return l


def profile_bounds(p: QuadraticProfile) -> BoundTable:
    a_f, b_f_cap = bound_constants(p)
    budget = 2 * a_f + b_f_cap
    k = 1
    while (k + 1) * (3 * (k + 1) - 2) <= budget:
        k += 1
    return BoundTable(
        a_f=a_f,
        b_f_cap=b_f_cap,
        k_cap=k,
        l_caps=tuple(l_cap(p, j) for j in range(1, k + 1)),
    )


def guaranteed_block_start(
    p: QuadraticProfile, k: int, table: BoundTable | None = None
) -> int:
    """Smallest n from which positivity is guaranteed without scanning.

    For k beyond the table cap this is the end of the head region,
    g_k + 2k + 1; otherwise it is the start of block l = L(k) + 1.
    """
    if table is None:
        table = profile_bounds(p)
    gk = pentagonal(k)
    if k > table.k_cap:
        return gk + 2 * k + 1
    l = table.l_caps[k - 1] + 1
    return gk + (3 * l - 1) * (2 * k + l) // 2


def tabulated_block_start(
    p: QuadraticProfile, k: int, table: BoundTable | None = None
) -> int:
    """Start of block L(k) itself: the upper end of the scan range the
    floor-based table suggests.  The slice from here to
    guaranteed_block_start is the extra block the strict inequality
    l > l_F(k) still requires; findings there are flagged separately."""
    if table is None:
        table = profile_bounds(p)
    gk = pentagonal(k)
    if k > table.k_cap:
        return gk + 2 * k + 1
    l = table.l_caps[k - 1]
    if l == 0:
        return gk + 2 * k + 1
    return gk + (3 * l - 1) * (2 * k + l) // 2


def closed_form_main(p: QuadraticProfile, k: int, m: int, h: int) -> Fraction:
    """Main term of the tail coefficient at n = m(3m-1)/2 + h.

    The true coefficient differs from this by at most 2(m-k) * b_f.
    """
    if not m > k >= 1:
        raise ValueError("need m > k >= 1")
    if not 0 <= h <= 3 * m:
        raise ValueError(f"h={h} outside [0, {3 * m}]")
    a, b = p.a, p.b
    main = (2 * a + b) * k - 3 * a * k**3 + a * k * (3 * m * m + (2 * h - m))
    f_hm = Fraction(r_closed_form(p, h - m)) if h >= m else Fraction(0)
    sign = 1 if (m - k) % 2 == 0 else -1
    return main - sign * ((2 * a + b) * m + a * m * (2 * h - m) - f_hm)
