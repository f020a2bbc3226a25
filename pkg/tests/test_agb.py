"""Residue-restricted products, nested sums and d-regular truncations."""

import pytest
from hypothesis import given, settings, strategies as st

from qtails.agb import (
    AGBParams,
    admissible_identity_residues,
    ag_product_side,
    ag_sum_side,
    alternating_d_sum_check,
    b_trunc_series,
    bd_series,
    c_series,
    cor_inequality_check,
    dregular_bruteforce,
    is_in_pset,
    pset_weight,
    tail_over_residue_classes,
)
from qtails.series import pentagonal


def test_params_validation():
    with pytest.raises(ValueError):
        AGBParams(d=0, i=1, tau=0)
    with pytest.raises(ValueError):
        AGBParams(d=2, i=4, tau=1)
    with pytest.raises(ValueError):
        AGBParams(d=1, i=1, tau=2)
    assert AGBParams(d=2, i=1, tau=1).modulus == 7


def test_identity_holds_on_admissible_residues():
    for d in (1, 2):
        for tau in (0, 1):
            for i in admissible_identity_residues(d, tau):
                p = AGBParams(d=d, i=i, tau=tau)
                assert ag_product_side(p, 60) == ag_sum_side(p, 60)


def test_identity_fails_outside_admissible_range():
    # even modulus with i = d+1: partitions into odd parts vs the sum side
    p = AGBParams(d=1, i=2, tau=0)
    assert ag_product_side(p, 30) != ag_sum_side(p, 30)


def test_sum_side_depth_refusal():
    with pytest.raises(ValueError):
        ag_sum_side(AGBParams(d=5, i=1, tau=1), 20)


def test_c_series_known_values():
    s = c_series(1, 5, 1, 20)
    assert s[7] == -1 and s[13] == -1
    assert s[9] == 0 and s[11] == 0
    assert c_series(2, 5, 1, 12)[5] == 0
    assert c_series(1, 7, 1, 10)[9] == 0


def test_c_series_vanishes_below_g_k():
    for k in (1, 2, 3):
        s = c_series(1, 7, k, 40)
        assert all(s[n] == 0 for n in range(pentagonal(k)))


def test_c_series_argument_validation():
    with pytest.raises(ValueError):
        c_series(1, 4, 1, 10)  # modulus too small
    with pytest.raises(ValueError):
        c_series(5, 10, 1, 10)  # 2i == modulus
    with pytest.raises(ValueError):
        c_series(1, 7, 0, 10)


@given(
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=0, max_value=200),
)
def test_pset_weight_vs_direct_enumeration(a, b, x):
    hits = [n for n in range(-100, 101) if a * (n * (n - 1) // 2) + b * n == x]
    assert pset_weight(a, b, x) == sum((-1) ** (n % 2) for n in hits)
    assert is_in_pset(a, b, x) == bool(hits)


def test_alternating_sum_expression():
    assert alternating_d_sum_check(1, 5, 1, 60)
    assert alternating_d_sum_check(2, 5, 2, 60)
    assert alternating_d_sum_check(1, 7, 1, 60)


@given(st.integers(min_value=2, max_value=6), st.integers(min_value=0, max_value=18))
@settings(max_examples=30, deadline=None)
def test_d_regular_series_vs_bruteforce(d, n):
    assert bd_series(d, n)[n] == dregular_bruteforce(d, n)


def test_b_trunc_is_tail_over_nonmultiples():
    for d, k in ((2, 1), (3, 2), (5, 3)):
        assert b_trunc_series(d, k, 80) == tail_over_residue_classes(
            k, d, {0}, 80
        )


def test_cor_inequality():
    assert cor_inequality_check(2, 1, 100)
    assert cor_inequality_check(3, 2, 100)
