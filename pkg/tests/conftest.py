# -*- coding: utf-8 -*-
"""
Shared fixtures. The toolkit is run from the repository root like its
scripts, so the root goes on sys.path.
"""


import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

from utils.newick_data import read_newick_file  # noqa: E402
from utils.tree_core import parse_newick  # noqa: E402

DATA_DIR = os.path.join(ROOT, 'data')


def load_tree(filename):
    """
    First tree of data/trees/<filename>
    """
    (line, tree), *_ = read_newick_file(os.path.join(DATA_DIR, 'trees', filename))
    return tree


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="module")
def loaded_7():
    """
    (((a,b),c),(e,(f,g)),d) : fully 4-loaded, g_1..g_4 = 233, 8, 3, 1
    """
    return load_tree('loaded_7.nwk')


@pytest.fixture(scope="module")
def caterpillar_9():
    return load_tree('caterpillar_9.nwk')


@pytest.fixture(scope="module")
def tripartite_10():
    """
    Linearization input: A = abc, B = def, C = ghij around one vertex
    """
    return load_tree('tripartite_10.nwk')


@pytest.fixture(scope="module")
def cat6_pair():
    """
    Caterpillar on a..f and the same caterpillar with b and c transposed
    """
    return parse_newick('(a,(b,(c,(d,(e,f)))));'), parse_newick('(a,(c,(b,(d,(e,f)))));')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: full-scale checks over many trees, deselect with -m "not slow"')
