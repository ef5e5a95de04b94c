# -*- coding: utf-8 -*-
"""
Run the property suite on seeded random trees: oracle equivalence, closed
forms, extremal sandwich, listing consistency, recurrences and the
transformations of the extremal trees
"""


import logging

import numpy as np

from utils import charcount
from utils import display
from utils import enumeration
from utils import extremal
from utils import oracle
from utils.errors import ConvexCharacterError, OracleSizeError, PreconditionError
from utils.tree_core import find_bounded_split

logger = logging.getLogger(__name__)


def _sample(rng, nmax, kmax, samples, n_min=1):
    for _ in range(samples):
        n = int(rng.integers(n_min, nmax + 1))
        k = int(rng.integers(1, kmax + 1))
        tree = extremal.random_tree(extremal.default_labels(n), rng)
        yield tree, k


def check_oracle(rng, nmax, kmax, samples):
    for tree, k in _sample(rng, nmax, kmax, samples):
        if charcount.count_gk(tree, k) != oracle.brute_count(tree, k):
            return False, f'count differs from brute force on {tree.newick} for k={k}'
    return True, f'{samples} trees'


def check_closed_forms(rng, nmax, samples):
    for tree, _ in _sample(rng, max(nmax, 2), 1, samples):
        if charcount.count_gk(tree, 1) != charcount.g1_closed(tree.n):
            return False, f'g_1 differs from F(2n-1) on {tree.newick}'
        if charcount.count_gk(tree, 2) != charcount.g2_closed(tree.n):
            return False, f'g_2 differs from F(n-1) on {tree.newick}'
    return True, f'{samples} trees'


def check_sandwich(rng, nmax, kmax, samples):
    for tree, k in _sample(rng, nmax, kmax, samples):
        value = charcount.count_gk(tree, k)
        if not charcount.gk_minimum(tree.n, k) <= value <= charcount.gk_maximum(tree.n, k):
            return False, f'g_{k} = {value} outside the extremal bounds on {tree.newick}'
    return True, f'{samples} trees'


def check_listing(rng, nmax, kmax, samples):
    for tree, k in _sample(rng, nmax, kmax, samples):
        characters = list(enumeration.list_gk(tree, k))
        if len(characters) != charcount.count_gk(tree, k):
            return False, f'listing length differs from count on {tree.newick} for k={k}'
        codes = [f.rgs() for f in characters]
        if any(a >= b for a, b in zip(codes, codes[1:])):
            return False, f'listing not strictly increasing on {tree.newick}'
        for f in characters:
            if f.min_block < k or not enumeration.is_convex(tree, f):
                return False, f'invalid character {f} on {tree.newick}'
            if enumeration.parsimony_score(tree, f) != len(f.blocks) - 1:
                return False, f'parsimony score of convex {f} is not blocks - 1'
    return True, f'{samples} trees'


def check_caterpillars(nmax, kmax):
    for n in range(1, nmax + 1):
        tree = extremal.gen_caterpillar(n)
        for k in range(1, kmax + 1):
            if charcount.count_gk(tree, k) != charcount.gk_caterpillar(n, k):
                return False, f'caterpillar n={n} k={k}'
    return True, f'n <= {nmax}, k <= {kmax}'


def check_fully_loaded(rng, nmax, kmax):
    checked = 0
    for k in range(2, kmax + 1):
        for n in range(k, nmax + 1):
            expected = charcount.gk_fully_loaded(n, k)
            trees = [extremal.gen_fully_loaded(n, k)]
            trees.append(extremal.random_fully_loaded(n, k, int(rng.integers(2 ** 32))))
            for tree in trees:
                checked += 1
                if charcount.count_gk(tree, k) != expected:
                    return False, f'fully {k}-loaded tree {tree.newick} has g_{k} != {expected}'
                if not extremal.is_fully_loaded(tree, k)[0]:
                    return False, f'{tree.newick} not recognised as fully {k}-loaded'
    return True, f'{checked} trees'


def check_recurrences(rng, nmax, kmax, samples):
    applied = 0
    for tree, k in _sample(rng, nmax, kmax, samples, n_min=min(4, nmax)):
        try:
            if not charcount.decrease_recurrence_check(tree, k):
                return False, f'split recurrence fails on {tree.newick} for k={k}'
            applied += 1
        except PreconditionError:
            pass
        for tp in charcount.applicable_tripartitions(tree, k):
            applied += 1
            if not charcount.tripartition_recurrence_check(tree, k, *tp.parts):
                return False, f'tripartition identity fails on {tree.newick} at {tp}'
    return True, f'{applied} applications'


def check_transformations(rng, nmax, kmax, samples):
    applied = 0
    for tree, k in _sample(rng, nmax, kmax, samples, n_min=min(4, nmax)):
        value = charcount.count_gk(tree, k)
        if k >= 2 and tree.n > k:
            split = find_bounded_split(tree, k)
            replaced = extremal.replace_with_local_fully_loaded(tree, split, k)
            applied += 1
            if charcount.count_gk(replaced, k) > value:
                return False, f'local replacement increases g_{k} on {tree.newick}'
        if tree.n >= 4:
            doubled = extremal.double_lone_taxa(tree)
            applied += 1
            if charcount.count_gk(tree, 3) > charcount.count_gk(doubled, 3) or \
                    charcount.count_gk(tree, 3) > charcount.cherry_bound(tree):
                return False, f'cherry bound fails on {tree.newick}'
    return True, f'{applied} applications'


def check_rates(kmax):
    rates = charcount.rate_table(max(kmax, 2))
    for rate in rates[1:]:
        if rate.residual > 1e-12:
            return False, f'residual {rate.residual} for k={rate.k}'
    if any(a.alpha <= b.alpha for a, b in zip(rates, rates[1:])):
        return False, 'maximum rate not decreasing in k'
    if any(rate.min_rate >= rate.alpha for rate in rates[2:]):
        return False, 'minimum rate not below maximum rate'
    return True, f'k <= {len(rates)}'


def run_properties(nmax=9, kmax=4, samples=200, seed=0):
    """
    Returns:
        list of (check name, passed, detail)
    """
    if nmax > oracle.MAX_ORACLE_TAXA:
        raise OracleSizeError(f'brute force is limited to {oracle.MAX_ORACLE_TAXA} taxa, got nmax={nmax}')
    if nmax < 1 or kmax < 1 or samples < 1:
        raise PreconditionError('nmax, kmax and samples must be positive')

    rng = np.random.default_rng(seed)
    checks = [
        ('oracle equivalence', lambda: check_oracle(rng, nmax, kmax, samples)),
        ('closed forms g_1 g_2', lambda: check_closed_forms(rng, nmax, samples)),
        ('extremal sandwich', lambda: check_sandwich(rng, nmax, kmax, samples)),
        ('listing consistency', lambda: check_listing(rng, nmax, kmax, samples)),
        ('caterpillar recurrence', lambda: check_caterpillars(nmax, kmax)),
        ('fully loaded value', lambda: check_fully_loaded(rng, nmax, kmax)),
        ('recurrence identities', lambda: check_recurrences(rng, nmax, kmax, samples)),
        ('tree transformations', lambda: check_transformations(rng, nmax, kmax, samples)),
        ('growth rates', lambda: check_rates(kmax)),
    ]
    results = []
    for name, check in checks:
        try:
            passed, detail = check()
        except ConvexCharacterError as err:
            passed, detail = False, f'raised {type(err).__name__}: {err}'
        logger.info('%s: %s (%s)', name, 'pass' if passed else 'FAIL', detail)
        results.append((name, passed, detail))
    return results


def verify_properties_analysis(dic):
    """
    Verify analysis using parameters stored in the dic
    """
    nmax = dic["nmax_verify"]
    kmax = dic["kmax_verify"]
    samples = dic["samples_verify"]
    seed = dic["seed_verify"]

    results = run_properties(nmax, kmax, samples, seed)

    display.display_report(results)
    return 0 if all(passed for _, passed, _ in results) else 1
