# -*- coding: utf-8 -*-
"""
Define functions for reading and writing Newick tree files and JSON solve instances
"""


import json
import logging
import sys

from utils.errors import InputError, InstanceError, NewickError
from utils.tree_core import parse_newick

logger = logging.getLogger(__name__)


def _read_lines(name):
    if name == '-':
        return sys.stdin.read().splitlines()
    try:
        with open(name, 'r', encoding='utf-8') as file:
            return file.read().splitlines()
    except FileNotFoundError:
        raise InputError(f'tree file not found: {name}') from None
    except OSError as err:
        raise InputError(f'cannot read {name}: {err.strerror}') from None


def read_newick_file(name):
    """
    Read a Newick file, one tree per line ('-' reads standard input).
    Returns:
        list of (line number, Tree); blank lines and lines starting with '#' are skipped
    """
    trees = []
    for number, line in enumerate(_read_lines(name), start=1):
        text = line.strip()
        if not text or text.startswith('#'):
            continue
        try:
            trees.append((number, parse_newick(text)))
        except NewickError as err:
            raise err.at_line(number) from None
    if not trees:
        raise InputError(f'no tree found in {name}')
    logger.info('read %d tree(s) from %s', len(trees), name)
    return trees


def write_newick_file(trees, name):
    """
    Write canonical Newick, one tree per line
    """
    try:
        with open(name, 'w', encoding='utf-8') as file:
            for tree in trees:
                file.write(tree.newick + '\n')
    except OSError as err:
        raise InputError(f'cannot write {name}: {err.strerror}') from None


def read_instance_file(name):
    """
    Read a JSON solve instance {trees: [newick...], k, mode, objective}
    """
    text = '\n'.join(_read_lines(name))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InstanceError(f'instance is not valid JSON: {err.msg} (line {err.lineno})') from None
    if not isinstance(data, dict):
        raise InstanceError('instance must be a JSON object')
    return data
