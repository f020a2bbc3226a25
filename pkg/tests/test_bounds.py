"""Exact bound constants and block thresholds."""

from fractions import Fraction

import pytest

from qtails import golden
from qtails.bounds import (
    bound_constants,
    closed_form_main,
    guaranteed_block_start,
    l_cap,
    tabulated_block_start,
    pfk_eval,
    profile_bounds,
)
from qtails.polya import Triple, periodic_profile
from qtails.tails import tp_series


def _profile(abc):
    return periodic_profile(Triple(*abc))


def test_block_quadratic_has_exact_integer_root():
    p = _profile((1, 2, 3))
    assert pfk_eval(p, 1, 15) == 0
    assert pfk_eval(p, 1, 14) < 0
    assert pfk_eval(p, 1, 16) > 0


def test_l_cap_at_exact_root():
    # P^1(15) = 0 counts as still inside the scanned range
    assert l_cap(_profile((1, 2, 3)), 1) == 15


def test_bound_table_matches_frozen_table():
    for abc, (c, b, k_cap, ls) in golden.TABLE2.items():
        p = _profile(abc)
        bt = profile_bounds(p)
        assert p.c == Fraction(c)
        assert p.b_f == Fraction(b)
        assert bt.k_cap == k_cap
        assert bt.l_caps == ls[:k_cap]
        assert tuple(l_cap(p, k) for k in range(1, 9)) == ls


def test_block_starts():
    p = _profile((1, 2, 3))
    bt = profile_bounds(p)
    # k=1: L(1)=15, so block 16 starts the guaranteed region
    assert guaranteed_block_start(p, 1, bt) == 2 + (3 * 16 - 1) * (2 + 16) // 2
    assert tabulated_block_start(p, 1, bt) == 2 + (3 * 15 - 1) * (2 + 15) // 2
    # beyond the cap only the head needs checking
    k = bt.k_cap + 1
    assert guaranteed_block_start(p, k, bt) == k * (3 * k + 1) // 2 + 2 * k + 1


def test_closed_form_main_validation():
    p = _profile((1, 2, 3))
    with pytest.raises(ValueError):
        closed_form_main(p, 2, 2, 0)  # needs m > k
    with pytest.raises(ValueError):
        closed_form_main(p, 1, 3, 10)  # h out of range


def test_sandwich_bound_single_triple():
    t = Triple(1, 3, 4)
    p = periodic_profile(t)
    k = 1
    s = tp_series(t, k, 400)
    for m in range(2, 10):
        for h in range(0, 3 * m + 1):
            n = m * (3 * m - 1) // 2 + h
            err = abs(Fraction(s[n]) - closed_form_main(p, k, m, h))
            assert err <= 2 * (m - k) * p.b_f


def test_bound_constants_are_exact_rationals():
    a_f, b_f_cap = bound_constants(_profile((2, 3, 5)))
    assert isinstance(a_f, Fraction) and isinstance(b_f_cap, Fraction)
    assert a_f > 0 and b_f_cap > 0
