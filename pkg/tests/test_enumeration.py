# -*- coding: utf-8 -*-
"""
Tests of utils/enumeration.py : characters, convexity, parsimony and the
listing of g_k characters
"""


from itertools import islice

import pytest
from hypothesis import given, settings, strategies as st

from utils.charcount import count_gk
from utils.enumeration import (Character, block_masks, extendable, gk_prefixes, is_convex, list_gk,
                               parsimony_score)
from utils.errors import NotAPartitionError, PreconditionError
from utils.extremal import gen_caterpillar, gen_random
from utils.oracle import brute_list
from utils.tree_core import parse_newick

LOADED_7_G2 = [
    'a,b,c,d,e,f,g',
    'a,b,c,d,e|f,g',
    'a,b,c,d|e,f,g',
    'a,b,c|d,e,f,g',
    'a,b,c|d,e|f,g',
    'a,b|c,d,e,f,g',
    'a,b|c,d,e|f,g',
    'a,b|c,d|e,f,g',
]


def texts(characters):
    return [f.to_text() for f in characters]


# ======================================================================== #
# Character                                                                 #
# ======================================================================== #


def test_character_canonical_form():
    f = Character.parse('c|b,a')
    assert f.blocks == (('a', 'b'), ('c',))
    assert f.to_text() == 'a,b|c'
    assert str(f) == 'a,b|c'
    assert f.to_json() == [['a', 'b'], ['c']]
    assert f.rgs() == (0, 0, 1)
    assert f.min_block == 1
    assert f.taxa == frozenset('abc')
    assert f == Character.from_rgs(['a', 'b', 'c'], [0, 0, 1])


def test_compact_character_text(loaded_7):
    f = Character.parse('abde|c|fg', taxa=loaded_7.taxa)
    assert f.to_text() == 'a,b,d,e|c|f,g'
    assert f == Character.parse('a,b,d,e|c|f,g')
    assert f.rgs() == (0, 0, 1, 0, 0, 2, 2)


@pytest.mark.parametrize("text", ['', 'a,b|a', 'a,,b', 'a||b', '|a'])
def test_malformed_character(text):
    with pytest.raises(NotAPartitionError):
        Character.parse(text)


def test_repeated_taxon_in_compact_block():
    with pytest.raises(NotAPartitionError):
        Character.parse('aa|b', taxa='ab')


def test_block_masks_need_a_partition_of_the_taxa(loaded_7):
    assert block_masks(loaded_7, Character.parse('a,b,c|d,e,f,g')) == [0b0000111, 0b1111000]
    with pytest.raises(NotAPartitionError):
        block_masks(loaded_7, Character.parse('a,b,c|d,e,f'))
    with pytest.raises(NotAPartitionError):
        block_masks(loaded_7, Character.parse('a,b,c|d,e,f,g,h'))


# ======================================================================== #
# convexity and parsimony                                                   #
# ======================================================================== #


@pytest.mark.parametrize("text, convex, score", [
    ('abde|c|fg', True, 2),
    ('abc|defg', True, 1),
    ('abcdefg', True, 0),
    ('ag|bcdef', False, 2),
    ('abcd|efg', True, 1),
    ('ae|bcdfg', False, 2),
])
def test_convexity_and_parsimony_on_loaded_7(loaded_7, text, convex, score):
    f = Character.parse(text, taxa=loaded_7.taxa)
    assert is_convex(loaded_7, f) is convex
    assert parsimony_score(loaded_7, f) == score


def test_convexity_depends_on_the_position_of_the_cherry():
    other = parse_newick('(((a,b),c),((e,f),g),d);')
    f = Character.parse('abde|c|fg', taxa=other.taxa)
    assert not is_convex(other, f)
    assert is_convex(other, Character.parse('abdg|c|ef', taxa=other.taxa))
    assert count_gk(other, 2) == 8


def test_single_taxon_character():
    t = parse_newick('a;')
    f = Character.parse('a')
    assert is_convex(t, f)
    assert parsimony_score(t, f) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=2 ** 32))
def test_parsimony_of_a_character_is_at_least_blocks_minus_one(n, seed):
    t = gen_random(n, seed)
    for f in brute_list(t, 1):
        assert parsimony_score(t, f) == len(f.blocks) - 1
    taxa = sorted(t.taxa)
    scattered = Character.from_rgs(taxa, [i % 2 for i in range(n)])
    assert parsimony_score(t, scattered) >= len(scattered.blocks) - 1


# ======================================================================== #
# listing                                                                   #
# ======================================================================== #


def test_list_loaded_7_g2(loaded_7):
    assert texts(list_gk(loaded_7, 2)) == LOADED_7_G2


def test_list_loaded_7_g3_and_g4(loaded_7):
    assert texts(list_gk(loaded_7, 3)) == ['a,b,c,d,e,f,g', 'a,b,c,d|e,f,g', 'a,b,c|d,e,f,g']
    assert texts(list_gk(loaded_7, 4)) == ['a,b,c,d,e,f,g']
    assert texts(list_gk(loaded_7, 8)) == []


def test_list_loaded_7_g1_is_everything(loaded_7):
    characters = list(list_gk(loaded_7, 1))
    assert len(characters) == 233
    assert characters == brute_list(loaded_7, 1)


def test_list_small_trees():
    assert texts(list_gk(parse_newick('a;'), 1)) == ['a']
    assert texts(list_gk(parse_newick('a;'), 2)) == []
    assert texts(list_gk(parse_newick('(a,b);'), 1)) == ['a,b', 'a|b']


def test_list_preconditions(loaded_7):
    with pytest.raises(PreconditionError):
        list(list_gk(loaded_7, 0))
    with pytest.raises(PreconditionError):
        list(list_gk(loaded_7, 2, prefix=(0, 2)))
    with pytest.raises(PreconditionError):
        list(list_gk(loaded_7, 2, prefix=(0,) * 8))
    with pytest.raises(PreconditionError):
        list(list_gk(loaded_7, 2, prefix=(1,)))


def test_listing_streams_lazily():
    first = list(islice(list_gk(gen_caterpillar(40), 1), 3))
    assert len(first) == 3
    assert first[0].blocks == (tuple(gen_caterpillar(40).labels),)


def test_extendable(loaded_7):
    assert extendable(loaded_7, 2, [0b1])
    # a and b form a cherry: two blocks of at least 2 taxa cannot both leave it
    assert not extendable(loaded_7, 2, [0b1, 0b10])
    assert extendable(loaded_7, 1, [0b1, 0b10])
    assert texts(list_gk(loaded_7, 2, prefix=(0, 1))) == []


def test_prefixes_cover_the_listing(loaded_7):
    prefixes = gk_prefixes(loaded_7, 2, 3)
    assert prefixes == [(0, 0, 0), (0, 0, 1)]
    merged = [f for prefix in prefixes for f in list_gk(loaded_7, 2, prefix=prefix)]
    assert texts(merged) == LOADED_7_G2
    with pytest.raises(PreconditionError):
        gk_prefixes(loaded_7, 2, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2 ** 32))
def test_listing_matches_brute_force(n, k, seed):
    t = gen_random(n, seed)
    characters = list(list_gk(t, k))
    assert characters == brute_list(t, k)
    assert len(characters) == count_gk(t, k)
    codes = [f.rgs() for f in characters]
    assert all(a < b for a, b in zip(codes, codes[1:]))
    for f in characters:
        assert f.min_block >= k
        assert is_convex(t, f)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=10), st.integers(min_value=1, max_value=4),
       st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=2 ** 32))
def test_prefixes_partition_the_listing(n, k, depth, seed):
    t = gen_random(n, seed)
    merged = [f for prefix in gk_prefixes(t, k, depth) for f in list_gk(t, k, prefix=prefix)]
    assert merged == list(list_gk(t, k))
