# -*- coding: utf-8 -*-
"""
Tests of utils/charcount.py : the counting DP, closed forms, growth rates and
recurrence checks
"""


import pytest
from hypothesis import given, settings, strategies as st

from utils import charcount
from utils.errors import PreconditionError
from utils.extremal import default_labels, double_lone_taxa, gen_caterpillar, gen_fully_loaded, gen_random
from utils.oracle import brute_count
from utils.tree_core import parse_newick


# ======================================================================== #
# counting DP                                                               #
# ======================================================================== #


@pytest.mark.parametrize("k, count", [(1, 233), (2, 8), (3, 3), (4, 1), (5, 1), (7, 1), (8, 0), (99, 0)])
def test_count_loaded_7(loaded_7, k, count):
    assert charcount.count_gk(loaded_7, k) == count


@pytest.mark.parametrize("seed", range(5))
def test_five_taxa_have_a_single_g3_character(seed):
    assert charcount.count_gk(gen_random(5, seed), 3) == 1


def test_count_single_taxon_and_pair():
    single = parse_newick('a;')
    assert charcount.count_gk(single, 1) == 1
    assert charcount.count_gk(single, 2) == 0
    pair = parse_newick('(a,b);')
    assert charcount.count_gk(pair, 1) == 2
    assert charcount.count_gk(pair, 2) == 1


def test_count_rejects_k_zero(loaded_7):
    with pytest.raises(PreconditionError):
        charcount.count_gk(loaded_7, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2 ** 32))
def test_count_matches_brute_force(n, k, seed):
    t = gen_random(n, seed)
    assert charcount.count_gk(t, k) == brute_count(t, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=2 ** 32))
def test_g1_and_g2_do_not_depend_on_topology(n, seed):
    t = gen_random(n, seed)
    assert charcount.count_gk(t, 1) == charcount.g1_closed(n)
    assert charcount.count_gk(t, 2) == charcount.g2_closed(n)


def test_count_is_exact_beyond_64_bits():
    t = gen_caterpillar(60)
    value = charcount.count_gk(t, 1)
    assert value == charcount.g1_closed(60)
    assert value > 2 ** 64


# ======================================================================== #
# closed forms                                                              #
# ======================================================================== #


@pytest.mark.parametrize("n, value", [(1, 1), (4, 13), (7, 233)])
def test_g1_closed(n, value):
    assert charcount.g1_closed(n) == value


@pytest.mark.parametrize("n, value", [(1, 0), (2, 1), (7, 8), (10, 34)])
def test_g2_closed(n, value):
    assert charcount.g2_closed(n) == value


def test_closed_forms_reject_empty_trees():
    with pytest.raises(PreconditionError):
        charcount.g1_closed(0)
    with pytest.raises(PreconditionError):
        charcount.g2_closed(0)


@pytest.mark.parametrize("n, k, value", [(7, 3, 3), (5, 3, 1), (3, 3, 1), (2, 3, 0), (10, 4, 4), (7, 1, 233)])
def test_gk_caterpillar(n, k, value):
    assert charcount.gk_caterpillar(n, k) == value


@pytest.mark.parametrize("k", range(1, 7))
def test_gk_caterpillar_matches_count(k):
    for n in range(1, 26):
        assert charcount.count_gk(gen_caterpillar(n), k) == charcount.gk_caterpillar(n, k)


@pytest.mark.parametrize("n, k, value", [(7, 3, 2), (7, 4, 1), (4, 4, 1), (9, 4, 1), (12, 3, 5)])
def test_gk_fully_loaded(n, k, value):
    assert charcount.gk_fully_loaded(n, k) == value


def test_gk_fully_loaded_preconditions():
    with pytest.raises(PreconditionError):
        charcount.gk_fully_loaded(7, 1)
    with pytest.raises(PreconditionError):
        charcount.gk_fully_loaded(3, 4)


def test_loaded_7_is_consistent_with_fully_4_loaded_value(loaded_7):
    assert charcount.count_gk(loaded_7, 4) == charcount.gk_fully_loaded(7, 4)


@pytest.mark.parametrize("n, k", [(6, 1), (6, 2), (10, 3), (3, 5)])
def test_extremes(n, k):
    low = charcount.gk_minimum(n, k)
    high = charcount.gk_maximum(n, k)
    assert low <= high
    if n < k:
        assert low == high == 0
    if k <= 2:
        assert low == high


@pytest.mark.parametrize("n", [3, 10, 20, 40])
def test_g3_caterpillar_closed(n):
    assert charcount.g3_caterpillar_closed(n) == charcount.gk_caterpillar(n, 3)


@pytest.mark.parametrize("n", [1, 5, 20, 30])
def test_float_closed_forms(n):
    assert charcount.g1_float(n) == charcount.g1_closed(n)
    assert charcount.g2_float(n) == charcount.g2_closed(n)


# ======================================================================== #
# growth rates                                                              #
# ======================================================================== #


@pytest.mark.parametrize("k, low, high", [
    (1, 2.618, 2.618),
    (2, 1.618, 1.618),
    (3, 1.272, 1.466),
    (4, 1.174, 1.380),
    (5, 1.128, 1.325),
    (6, 1.101, 1.285),
])
def test_growth_rate_table(k, low, high):
    rate = charcount.growth_rate(k)
    assert rate.k == k
    assert rate.alpha == pytest.approx(high, abs=1e-3)
    assert rate.min_rate == pytest.approx(low, abs=1e-3)
    assert rate.residual <= 1e-12


def test_growth_rate_properties():
    rates = charcount.rate_table(10)
    assert [rate.k for rate in rates] == list(range(1, 11))
    assert all(a.alpha > b.alpha for a, b in zip(rates, rates[1:]))
    assert all(rate.min_rate < rate.alpha for rate in rates[2:])
    with pytest.raises(PreconditionError):
        charcount.growth_rate(0)
    with pytest.raises(PreconditionError):
        charcount.rate_table(0)


# ======================================================================== #
# recurrences and bounds                                                    #
# ======================================================================== #


def test_decrease_recurrence_on_loaded_7(loaded_7):
    assert charcount.decrease_recurrence_check(loaded_7, 3, subset={'a', 'b', 'c'})
    assert charcount.decrease_recurrence_check(loaded_7, 3)


def test_decrease_recurrence_on_caterpillar():
    assert charcount.decrease_recurrence_check(gen_caterpillar(10), 3)


def test_decrease_recurrence_on_fully_loaded():
    t = parse_newick('(((a,b),c),((d,e),f),((g,h),i));')
    assert charcount.decrease_recurrence_check(t, 3, subset={'g', 'h', 'i'})


def test_decrease_recurrence_preconditions(loaded_7):
    with pytest.raises(PreconditionError):
        charcount.decrease_recurrence_check(loaded_7, 3, subset={'a', 'b', 'd'})
    with pytest.raises(PreconditionError):
        charcount.decrease_recurrence_check(parse_newick("((a,b),(c,d));"), 4)
    with pytest.raises(PreconditionError):
        charcount.decrease_recurrence_check(loaded_7, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=4, max_value=16), st.integers(min_value=2, max_value=5),
       st.integers(min_value=0, max_value=2 ** 32))
def test_decrease_recurrence_on_random_trees(n, k, seed):
    t = gen_random(n, seed)
    try:
        assert charcount.decrease_recurrence_check(t, k)
    except PreconditionError:
        pass


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=6, max_value=16), st.integers(min_value=2, max_value=4),
       st.integers(min_value=0, max_value=2 ** 32))
def test_tripartition_recurrence_on_random_trees(n, k, seed):
    t = gen_random(n, seed)
    for tp in charcount.applicable_tripartitions(t, k):
        assert len(tp.part_b) == k - 1
        assert charcount.tripartition_recurrence_check(t, k, *tp.parts)


def test_tripartition_recurrence_on_caterpillar():
    t = gen_caterpillar(12)
    applied = list(charcount.applicable_tripartitions(t, 3))
    assert applied
    for tp in applied:
        assert charcount.tripartition_recurrence_check(t, 3, tp.part_a, tp.part_b, tp.part_c)


def test_tripartition_recurrence_preconditions(tripartite_10):
    with pytest.raises(PreconditionError):
        charcount.tripartition_recurrence_check(tripartite_10, 3, set('abcd'), set('ef'), set('ghij'))
    with pytest.raises(PreconditionError):
        charcount.tripartition_recurrence_check(tripartite_10, 3, set('abc'), set('def'), set('ghij'))


def test_cherry_bound(loaded_7):
    assert charcount.cherry_bound(loaded_7) == 3
    assert charcount.count_gk(loaded_7, 3) <= charcount.cherry_bound(loaded_7)
    assert charcount.count_gk(double_lone_taxa(loaded_7), 3) == charcount.cherry_bound(loaded_7)
    with pytest.raises(PreconditionError):
        charcount.cherry_bound(parse_newick('(a,b,c);'))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=4, max_value=18), st.integers(min_value=0, max_value=2 ** 32))
def test_cherry_bound_on_random_trees(n, seed):
    t = gen_random(n, seed)
    assert charcount.count_gk(t, 3) <= charcount.cherry_bound(t)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=24), st.integers(min_value=1, max_value=6),
       st.integers(min_value=0, max_value=2 ** 32))
def test_sandwich(n, k, seed):
    value = charcount.count_gk(gen_random(n, seed), k)
    assert charcount.gk_minimum(n, k) <= value <= charcount.gk_maximum(n, k)


def test_minimum_is_reached_by_fully_loaded_trees():
    for k in range(2, 6):
        for n in range(k, 16):
            t = gen_fully_loaded(n, k, labels=default_labels(n))
            assert charcount.count_gk(t, k) == charcount.gk_minimum(n, k)


# ======================================================================== #
# full-scale checks                                                         #
# ======================================================================== #


@pytest.mark.slow
@pytest.mark.parametrize("n", range(5, 10))
def test_count_matches_brute_force_on_200_trees(n):
    for seed in range(200):
        t = gen_random(n, seed)
        for k in range(1, 5):
            assert charcount.count_gk(t, k) == brute_count(t, k), (t.newick, k)


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 15, 20])
def test_sandwich_on_1000_trees(n):
    trees = [gen_random(n, seed) for seed in range(1000)]
    for k in (3, 4, 5):
        low, high = charcount.gk_fully_loaded(n, k), charcount.gk_caterpillar(n, k)
        assert charcount.count_gk(gen_fully_loaded(n, k), k) == low
        assert charcount.count_gk(gen_caterpillar(n), k) == high
        for t in trees:
            assert low <= charcount.count_gk(t, k) <= high
