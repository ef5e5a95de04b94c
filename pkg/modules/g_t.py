# -*- coding: utf-8 -*-
"""
Generate trees of the caterpillar, fully k-loaded and random families and
print them in canonical Newick or write them to a Newick file
"""


import logging

from utils import display
from utils import extremal
from utils import newick_data
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)

FAMILIES = ('caterpillar', 'fully_loaded', 'random')


def generate_tree(family, n, k=None, seed=None):
    """
    One tree of the family on n taxa. Fully loaded trees use the default
    caterpillar shapes, or random shapes when a seed is given
    """
    if family == 'caterpillar':
        return extremal.gen_caterpillar(n)
    if family == 'fully_loaded':
        if k is None:
            raise PreconditionError('the fully_loaded family needs k')
        if seed is None:
            return extremal.gen_fully_loaded(n, k)
        return extremal.random_fully_loaded(n, k, seed)
    if family == 'random':
        return extremal.gen_random(n, 0 if seed is None else seed)
    raise PreconditionError(f'unknown family {family!r}, known: {", ".join(FAMILIES)}')


def generate_trees_analysis(dic):
    """
    Generation analysis using parameters stored in the dic
    """
    family = dic["family_gen"]
    n = dic["n_gen"]
    k = dic["k_gen"]
    seed = dic["seed_gen"]
    count = dic["count_gen"]
    output = dic.get("output_gen")

    if count < 1:
        raise PreconditionError(f'number of trees must be positive, got {count}')
    if family == 'fully_loaded' and k is not None and n < k:
        raise PreconditionError(f'fully loaded trees need n >= k, got n={n}, k={k}')

    trees = []
    for i in range(count):
        tree_seed = None if seed is None else seed + i
        if family == 'random' and seed is None:
            tree_seed = i
        trees.append(generate_tree(family, n, k, tree_seed))

    if output:
        newick_data.write_newick_file(trees, output)
        logger.info('wrote %d tree(s) to %s', len(trees), output)
    else:
        display.display_trees(trees)
    return 0
