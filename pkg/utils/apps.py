# -*- coding: utf-8 -*-
"""
Solvers that loop through the g_k characters of a tree and keep the best one
for a criterion: agreement forests with components of at least k taxa, exact
partitions into quartets of identical topology, and the minimization of an
objective (sum of parsimony scores over a set of trees), on a given tree or
jointly over the choice of tree.

A scan can be spread over worker threads: the listing is cut into the
restricted-growth prefixes of its first taxa, each worker scans whole
prefixes, and partial results are merged in prefix order so that the answer
does not depend on the number of workers.
"""


import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from utils.charcount import count_gk
from utils.enumeration import gk_prefixes, is_convex, list_gk, parsimony_score
from utils.errors import InstanceError, NewickError, PreconditionError, TaxonMismatchError, UnknownObjectiveError
from utils.tree_core import parse_newick, restrict

logger = logging.getLogger(__name__)

AGREEMENT = 'agreement_forest_min_components'
QUARTET = 'quartet_exact_partition'
OBJECTIVE = 'objective_optimize'
MODES = (AGREEMENT, QUARTET, OBJECTIVE)

# taxa fixed by the prefixes handed to worker threads
PREFIX_DEPTH = 4


def sum_parsimony(f, trees):
    return sum(parsimony_score(t, f) for t in trees)


OBJECTIVES = {'sum_parsimony': sum_parsimony}


@dataclass
class SolveInstance:
    trees: list
    k: int
    mode: str
    objective: str = 'sum_parsimony'
    scan_tree: object = None
    symmetrize: bool = False
    choose_tree: bool = False

    @classmethod
    def from_json(cls, data):
        """
        Instance from the decoded JSON object {trees: [newick...], k, mode, objective}
        """
        if not isinstance(data, dict):
            raise InstanceError('instance must be a JSON object')
        mode = data.get('mode')
        if mode not in MODES:
            raise InstanceError(f'mode must be one of {", ".join(MODES)}, got {mode!r}')
        texts = data.get('trees')
        if not isinstance(texts, list) or not texts or not all(isinstance(x, str) for x in texts):
            raise InstanceError("'trees' must be a non-empty list of Newick strings")
        trees = [_parse_member(text, f'trees[{i}]') for i, text in enumerate(texts)]

        k = data.get('k', 4 if mode == QUARTET else None)
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise InstanceError(f"'k' must be a positive integer, got {k!r}")
        objective = data.get('objective', 'sum_parsimony')
        if not isinstance(objective, str):
            raise InstanceError("'objective' must be a string")
        scan_tree = data.get('tree')
        if scan_tree is not None:
            if not isinstance(scan_tree, str):
                raise InstanceError("'tree' must be a Newick string")
            scan_tree = _parse_member(scan_tree, 'tree')
        symmetrize = data.get('symmetrize', False)
        if not isinstance(symmetrize, bool):
            raise InstanceError("'symmetrize' must be true or false")
        choose_tree = data.get('choose_tree', False)
        if not isinstance(choose_tree, bool):
            raise InstanceError("'choose_tree' must be true or false")
        if choose_tree and scan_tree is not None:
            raise InstanceError("'choose_tree' picks the scanned tree among 'trees', drop 'tree'")
        return cls(trees=trees, k=k, mode=mode, objective=objective, scan_tree=scan_tree, symmetrize=symmetrize,
                   choose_tree=choose_tree)


def _parse_member(text, where):
    try:
        return parse_newick(text)
    except NewickError as err:
        raise InstanceError(f'{where}: {err}') from None


@dataclass
class SolveResult:
    mode: str
    character: object = None
    objective_value: object = None
    characters_scanned: int = 0
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    def to_json(self):
        """
        Counts as decimal strings, wall time in milliseconds
        """
        return {
            'mode': self.mode,
            'character': None if self.character is None else self.character.to_text(),
            'blocks': None if self.character is None else len(self.character.blocks),
            'objective_value': None if self.objective_value is None else str(self.objective_value),
            'characters_scanned': str(self.characters_scanned),
            'wall_time_ms': round(self.wall_time * 1000.0, 3),
            **self.details,
        }


# ----------------------------------------------------------------------
# scanning
# ----------------------------------------------------------------------

def _best_in(stream, score):
    """
    First character of the stream with the smallest score; None scores are rejected
    """
    best = None
    best_score = None
    scanned = 0
    for f in stream:
        scanned += 1
        value = score(f)
        if value is not None and (best_score is None or value < best_score):
            best, best_score = f, value
    return best, best_score, scanned


def scan(t, k, score, workers=1):
    """
    Scan every g_k character of t.
    Returns:
        (best character or None, its score, number of characters scanned)
    """
    if workers <= 1:
        return _best_in(list_gk(t, k), score)

    prefixes = gk_prefixes(t, k, PREFIX_DEPTH)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda prefix: _best_in(list_gk(t, k, prefix=prefix), score), prefixes))

    best = None
    best_score = None
    scanned = 0
    for f, value, count in parts:
        scanned += count
        if value is not None and (best_score is None or value < best_score):
            best, best_score = f, value
    return best, best_score, scanned


def _check_taxa(trees):
    if not trees:
        raise PreconditionError('at least one tree is required')
    taxa = trees[0].taxa
    for i, t in enumerate(trees[1:], start=1):
        if t.taxa != taxa:
            raise TaxonMismatchError(f'tree {i} is on a different taxon set than tree 0')


def _agree(f, trees):
    """
    Whether f is convex on every tree and each block has the same topology in all of them
    """
    if not all(is_convex(t, f) for t in trees):
        return False
    for block in f.blocks:
        shapes = {restrict(t, block).newick for t in trees}
        if len(shapes) > 1:
            return False
    return True


# ----------------------------------------------------------------------
# solvers
# ----------------------------------------------------------------------

def solve_agreement_forest(trees, k, symmetrize=False, workers=1):
    """
    Convex character with the fewest blocks, all of at least k taxa, whose
    blocks induce the same subtree in every tree. The scan runs on trees[0],
    or on the tree with the fewest g_k characters when symmetrize is set.
    """
    start = time.perf_counter()
    _check_taxa(trees)
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    scanned_index = 0
    if symmetrize:
        counts = [count_gk(t, k) for t in trees]
        scanned_index = counts.index(min(counts))

    def score(f):
        return len(f.blocks) if _agree(f, trees) else None

    best, value, scanned = scan(trees[scanned_index], k, score, workers)
    logger.info('agreement scan over %d characters, best %s components', scanned, value)
    return SolveResult(mode=AGREEMENT, character=best, objective_value=value, characters_scanned=scanned,
                       wall_time=time.perf_counter() - start, details={'scanned_tree': scanned_index})


def solve_agreement_kforest(t1, t2, k, symmetrize=False, workers=1):
    return solve_agreement_forest([t1, t2], k, symmetrize=symmetrize, workers=workers)


def solve_quartet_partition(trees, workers=1):
    """
    Partition of the taxa into blocks of exactly 4 taxa, convex on every tree,
    each block with the same quartet topology in every tree
    """
    start = time.perf_counter()
    _check_taxa(trees)
    if trees[0].n % 4:
        logger.info('%d taxa cannot be split into quartets', trees[0].n)
        return SolveResult(mode=QUARTET, wall_time=time.perf_counter() - start)

    def score(f):
        if any(len(block) != 4 for block in f.blocks):
            return None
        return 0 if _agree(f, trees) else None

    best, value, scanned = scan(trees[0], 4, score, workers)
    logger.info('quartet scan over %d characters, %s', scanned, 'solved' if best else 'no partition')
    return SolveResult(mode=QUARTET, character=best, characters_scanned=scanned,
                       wall_time=time.perf_counter() - start)


def _objective_function(objective, k):
    try:
        function = OBJECTIVES[objective]
    except KeyError:
        raise UnknownObjectiveError(f'unknown objective {objective!r}, known: {", ".join(OBJECTIVES)}') from None
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    return function


def solve_objective(t, trees, k, objective='sum_parsimony', workers=1):
    """
    g_k character of t minimizing the objective over trees, first in listing order on ties
    """
    start = time.perf_counter()
    function = _objective_function(objective, k)
    _check_taxa([t] + list(trees))

    best, value, scanned = scan(t, k, lambda f: function(f, trees), workers)
    logger.info('objective scan over %d characters, best %s = %s', scanned, objective, value)
    return SolveResult(mode=OBJECTIVE, character=best, objective_value=value, characters_scanned=scanned,
                       wall_time=time.perf_counter() - start, details={'objective': objective})


def solve_objective_any_tree(trees, k, objective='sum_parsimony', workers=1):
    """
    Choose the tree together with the character: scan the g_k characters of
    every tree of trees and keep the overall minimum of the objective over
    trees. Ties go to the lowest tree index, then to listing order.
    """
    start = time.perf_counter()
    function = _objective_function(objective, k)
    _check_taxa(trees)

    best = None
    best_value = None
    chosen = None
    scanned = 0
    for i, t in enumerate(trees):
        character, value, count = scan(t, k, lambda f: function(f, trees), workers)
        scanned += count
        logger.debug('tree %d: %d characters, best %s = %s', i, count, objective, value)
        if value is not None and (best_value is None or value < best_value):
            best, best_value, chosen = character, value, i
    logger.info('objective scan over %d trees and %d characters, best %s = %s',
                len(trees), scanned, objective, best_value)
    return SolveResult(mode=OBJECTIVE, character=best, objective_value=best_value, characters_scanned=scanned,
                       wall_time=time.perf_counter() - start,
                       details={'objective': objective, 'chosen_tree': chosen})


def solve_instance(instance, workers=1):
    if instance.mode == AGREEMENT:
        return solve_agreement_forest(instance.trees, instance.k, instance.symmetrize, workers)
    if instance.mode == QUARTET:
        return solve_quartet_partition(instance.trees, workers)
    if instance.choose_tree:
        return solve_objective_any_tree(instance.trees, instance.k, instance.objective, workers)
    scan_tree = instance.scan_tree if instance.scan_tree is not None else instance.trees[0]
    return solve_objective(scan_tree, instance.trees, instance.k, instance.objective, workers)
