# -*- coding: utf-8 -*-
"""
Tests of utils/oracle.py : brute-force partitions and counts
"""


import pytest

from utils.charcount import count_gk
from utils.enumeration import list_gk
from utils.errors import OracleSizeError, PreconditionError
from utils.extremal import default_labels, gen_random
from utils.oracle import MAX_ORACLE_TAXA, PartitionCursor, all_partitions, bell_number, brute_count, brute_list


@pytest.mark.parametrize("n", range(1, 9))
def test_partitions_are_counted_by_bell_numbers(n):
    assert sum(1 for _ in all_partitions(default_labels(n))) == bell_number(n)


def test_partitions_of_three_taxa():
    assert [f.to_text() for f in all_partitions('abc', 1)] == ['a,b,c', 'a,b|c', 'a,c|b', 'a|b,c', 'a|b|c']


def test_partitions_with_blocks_of_two():
    assert [f.to_text() for f in all_partitions('abcd', 2)] == ['a,b,c,d', 'a,b|c,d', 'a,c|b,d', 'a,d|b,c']


def test_partitions_with_a_single_block():
    assert len(list(all_partitions(default_labels(7), 7))) == 1


@pytest.mark.parametrize("n, m", [(6, 2), (7, 3), (8, 2), (8, 4)])
def test_pruned_walk_equals_filtered_walk(n, m):
    taxa = default_labels(n)
    filtered = [f for f in all_partitions(taxa, 1) if f.min_block >= m]
    assert list(all_partitions(taxa, m)) == filtered


def test_cursor_yields_restricted_growth_strings():
    codes = list(PartitionCursor('abcd', 2))
    assert codes == [(0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0)]


def test_cursor_preconditions():
    with pytest.raises(PreconditionError):
        PartitionCursor('abca')
    with pytest.raises(PreconditionError):
        PartitionCursor('abc', 4)
    with pytest.raises(OracleSizeError):
        PartitionCursor(default_labels(MAX_ORACLE_TAXA + 1))


@pytest.mark.parametrize("k, count", [(1, 233), (2, 8), (3, 3), (4, 1), (8, 0)])
def test_brute_count_loaded_7(loaded_7, k, count):
    assert brute_count(loaded_7, k) == count


@pytest.mark.parametrize("seed", range(4))
def test_brute_force_agrees_with_dp_on_eight_taxa(seed):
    t = gen_random(8, seed)
    assert brute_count(t, 3) == count_gk(t, 3)
    assert brute_list(t, 3) == list(list_gk(t, 3))


def test_brute_force_guard():
    with pytest.raises(OracleSizeError):
        brute_count(gen_random(MAX_ORACLE_TAXA + 1, 0), 3)
    with pytest.raises(PreconditionError):
        brute_list(gen_random(4, 0), 0)
