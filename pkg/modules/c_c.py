# -*- coding: utf-8 -*-
"""
Count the convex characters of every tree of a Newick file whose blocks all
hold at least k taxa
"""


import logging

from utils import charcount
from utils import display
from utils import newick_data

logger = logging.getLogger(__name__)


def count_characters_analysis(dic):
    """
    Count analysis using parameters stored in the dic
    """
    tree_file = dic["tree_file_count"]
    k = dic["k_count"]

    trees = newick_data.read_newick_file(tree_file)

    rows = []
    for line, tree in trees:
        rows.append((line, tree.n, k, charcount.count_gk(tree, k)))
        logger.info('line %d: %d taxa, g_%d = %d', line, tree.n, k, rows[-1][3])

    display.display_counts(rows)
    return 0
