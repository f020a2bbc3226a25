"""Andrews--Gordon--Bressoud identities, C-series, and d-regular truncations.

The residue-restricted infinite products are built factor by factor: only
exponents up to the truncation order contribute, so every quotient is a
finite chain of exact stride divisions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .series import (
    CoefficientSeries,
    div_one_minus_qa,
    monomial,
    one,
    pentagonal,
    pentagonal_tail,
)
from .tails import BRUTEFORCE_CAP, partition_iter

#: nested-sum enumeration refuses beyond this identity depth
MAX_SUM_DEPTH = 4


@dataclass(frozen=True)
class AGBParams:
    """Depth d, residue i and Bressoud flag tau of one identity instance."""

    d: int
    i: int
    tau: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not 1 <= self.i <= self.d + 1:
            raise ValueError(f"i must lie in [1, {self.d + 1}]")
        if self.tau not in (0, 1):
            raise ValueError("tau must be 0 or 1")

    @property
    def modulus(self) -> int:
        return 2 * self.d + 2 + self.tau


def admissible_identity_residues(d: int, tau: int) -> range:
    """Residues i for which product and sum side of the identity agree.

    The odd-modulus (Andrews--Gordon, tau=1) case allows 1 <= i <= d+1;
    the even-modulus (Bressoud, tau=0) case only 1 <= i <= d, as a
    truncated scan confirms (i = d+1 with tau=0 is not an identity).
    """
    return range(1, d + tau + 1)


def inverse_residue_product(
    s: CoefficientSeries, modulus: int, excluded: set[int]
) -> CoefficientSeries:
    """s divided by (1 - q^n) for every n whose residue mod ``modulus``
    is not excluded."""
    excluded = {r % modulus for r in excluded}
    for n in range(1, s.order + 1):
        if n % modulus not in excluded:
            s = div_one_minus_qa(s, n)
    return s


def ag_product_side(p: AGBParams, order: int) -> CoefficientSeries:
    """Partitions into parts not congruent to 0, +-i mod (2d+2+tau)."""
    m = p.modulus
    return inverse_residue_product(one(order), m, {0, p.i, m - p.i})


def ag_sum_side(p: AGBParams, order: int) -> CoefficientSeries:
    """The nested sum over chains r_1 >= ... >= r_d >= 0.

    Each chain contributes q^{r_1^2+...+r_d^2+r_i+...+r_d} over the
    difference factors (q;q)_{r_j - r_{j+1}} and (q^{2-tau};q^{2-tau})_{r_d}.
    """
    if p.d > MAX_SUM_DEPTH:
        raise ValueError(f"sum side limited to d <= {MAX_SUM_DEPTH}, got d={p.d}")
    total = CoefficientSeries((0,) * (order + 1))
    stride = 2 - p.tau

    def term(rs: tuple[int, ...]) -> CoefficientSeries:
        e = sum(r * r for r in rs) + sum(rs[p.i - 1 :])
        s = monomial(1, e, order)
        for j in range(p.d - 1):
            for a in range(1, rs[j] - rs[j + 1] + 1):
                s = div_one_minus_qa(s, a)
        for t in range(1, rs[-1] + 1):
            s = div_one_minus_qa(s, stride * t)
        return s

    def walk(rs: tuple[int, ...], sq: int):
        if len(rs) == p.d:
            nonlocal total
            total = total + term(rs)
            return
        top = rs[-1] if rs else isqrt(order)
        for r in range(top, -1, -1):
            if sq + r * r > order:
                continue
            walk(rs + (r,), sq + r * r)

    walk((), 0)
    return total


def c_series(i: int, modulus: int, k: int, order: int) -> CoefficientSeries:
    """The truncated series C^k_{i,M}: pentagonal tail over the product of
    1/(1-q^n) for n not congruent to 0, +-i mod M."""
    if modulus < 5:
        raise ValueError("modulus must be >= 5")
    if not 1 <= i < modulus or i % modulus == 0 or 2 * i == modulus:
        raise ValueError(f"residue i={i} invalid for modulus {modulus}")
    if k < 1:
        raise ValueError("k must be >= 1")
    s = pentagonal_tail(k, order)
    return inverse_residue_product(s, modulus, {0, i, modulus - i})


def is_in_pset(a: int, b: int, x: int) -> bool:
    """Membership of x in {a*binom(n,2) + b*n : n in Z}."""
    return _pset_hits(a, b, x) > 0


def _pset_hits(a: int, b: int, x: int) -> int:
    if a < 1:
        raise ValueError("a must be >= 1")
    if x < 0:
        return 0
    hits = 0
    bound = 2 * (isqrt(2 * x // a + 1) + abs(b) + 2)
    for n in range(-bound, bound + 1):
        if a * (n * (n - 1) // 2) + b * n == x:
            hits += 1
    return hits


def pset_weight(a: int, b: int, x: int) -> int:
    """sum of (-1)^n over integers n with a*binom(n,2) + b*n = x.

    This is the coefficient of q^x in the theta series
    sum_{n in Z} (-1)^n q^{a*binom(n,2)+b*n}.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if x < 0:
        return 0
    w = 0
    bound = 2 * (isqrt(2 * x // a + 1) + abs(b) + 2)
    for n in range(-bound, bound + 1):
        if a * (n * (n - 1) // 2) + b * n == x:
            w += 1 if n % 2 == 0 else -1
    return w


def alternating_d_sum_check(i: int, modulus: int, k: int, order: int) -> bool:
    """Verifies the alternating-sum expression for C^k_{i,M}(n), n <= order.

    The correction term carries the sign of the theta coefficient at n
    (the exponent n = M*binom(m,2) + i*m contributes (-1)^m); with an
    unsigned indicator the relation fails already at small n.
    """
    c = c_series(i, modulus, k, order)
    tau = modulus % 2
    d = (modulus - 2 - tau) // 2
    dd = ag_product_side(AGBParams(d=d, i=i, tau=tau), order)
    sk = 1 if (k - 1) % 2 == 0 else -1
    for n in range(order + 1):
        acc = 0
        for ell in range(-k + 1, k + 1):
            shift = ell * (3 * ell - 1) // 2
            if n - shift >= 0:
                acc += (1 if ell % 2 == 0 else -1) * dd[n - shift]
        val = sk * acc - sk * pset_weight(modulus, i, n)
        if val != c[n]:
            return False
    return True


def bd_series(d: int, order: int) -> CoefficientSeries:
    """d-regular partition counts b_d(n): no part divisible by d."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return inverse_residue_product(one(order), d, {0})


def b_trunc_series(d: int, k: int, order: int) -> CoefficientSeries:
    """B_d^k: pentagonal tail over (q, q^2, ..., q^{d-1}; q^d)_infty."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    return inverse_residue_product(pentagonal_tail(k, order), d, {0})


def tail_over_residue_classes(
    k: int, modulus: int, excluded: set[int], order: int
) -> CoefficientSeries:
    """Pentagonal tail divided by (1-q^n) for all n avoiding ``excluded``
    residues mod ``modulus`` (generic form of c_series / b_trunc_series)."""
    return inverse_residue_product(pentagonal_tail(k, order), modulus, excluded)


def dregular_bruteforce(d: int, n: int, cap: int = BRUTEFORCE_CAP) -> int:
    """b_d(n) by exhaustive enumeration."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    return sum(
        1 for parts in partition_iter(n) if all(p % d != 0 for p in parts)
    )


def cor_inequality_check(d: int, k: int, order: int) -> bool:
    """The d-regular inequality: the alternating b_d sum plus the signed
    pentagonal correction at n/d is >= 0, strictly for n >= g_k."""
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    bd = bd_series(d, order)
    sk = 1 if (k - 1) % 2 == 0 else -1
    gk = pentagonal(k)
    for n in range(order + 1):
        acc = 0
        for ell in range(-k + 1, k + 1):
            shift = ell * (3 * ell - 1) // 2
            if n - shift >= 0:
                acc += (1 if ell % 2 == 0 else -1) * bd[n - shift]
        val = sk * acc
        if n % d == 0:
            val -= sk * pset_weight(3, 1, n // d)
        if val < 0 or (n >= gk and val == 0):
            return False
    return True
