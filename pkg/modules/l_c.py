# -*- coding: utf-8 -*-
"""
List the convex characters of the trees of a Newick file, one per line in
canonical order, with all blocks of at least k taxa
"""


import logging

from utils import display
from utils import enumeration
from utils import newick_data

logger = logging.getLogger(__name__)

# exit status of a listing cut short by the limit
TRUNCATED = 3


def list_characters_analysis(dic):
    """
    List analysis using parameters stored in the dic
    """
    tree_file = dic["tree_file_list"]
    k = dic["k_list"]
    limit = dic["limit_list"]
    fmt = dic["format_list"]

    trees = newick_data.read_newick_file(tree_file)

    # several trees in JSON: one object per tree instead of '# line' headers
    grouped = fmt == 'json' and len(trees) > 1

    printed = 0
    for line, tree in trees:
        if len(trees) > 1 and not grouped:
            print(f'# line {line}')
        batch = []
        truncated = False
        for f in enumeration.list_gk(tree, k):
            if limit is not None and printed >= limit:
                truncated = True
                break
            if grouped:
                batch.append(f.to_json())
            else:
                display.display_character(f, fmt)
            printed += 1
        if grouped and (batch or not truncated):
            display.display_tree_characters(line, batch)
        if truncated:
            logger.info('listing truncated after %d characters', printed)
            return TRUNCATED

    logger.info('listed %d characters', printed)
    return 0
