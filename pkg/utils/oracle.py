# -*- coding: utf-8 -*-
"""
Brute-force ground truth: walk every set partition of the taxa and keep the
convex ones whose blocks hold at least k taxa
"""


import logging

from utils.enumeration import Character, is_convex
from utils.errors import OracleSizeError, PreconditionError
from utils.maths_functions import bell_number

logger = logging.getLogger(__name__)

# Bell(15) is about 1.4e9
MAX_ORACLE_TAXA = 14

__all__ = ['MAX_ORACLE_TAXA', 'PartitionCursor', 'all_partitions', 'bell_number', 'brute_count', 'brute_list']


def _guard(n):
    if n > MAX_ORACLE_TAXA:
        raise OracleSizeError(f'brute force is limited to {MAX_ORACLE_TAXA} taxa, got {n}')


class PartitionCursor:
    """
    Restricted-growth strings over an ordered taxon list, each set partition
    exactly once. A prefix is abandoned as soon as the taxa left cannot bring
    every block up to min_block.
    """

    def __init__(self, taxa, min_block=1):
        self.taxa = tuple(taxa)
        if len(set(self.taxa)) != len(self.taxa):
            raise PreconditionError('duplicate taxon in partition cursor')
        if not 1 <= min_block <= max(len(self.taxa), 1):
            raise PreconditionError(f'min_block must lie in 1..{len(self.taxa)}, got {min_block}')
        _guard(len(self.taxa))
        self.min_block = min_block

    def __iter__(self):
        n = len(self.taxa)
        if n == 0:
            return
        rgs = [0] * n
        sizes = [1]
        yield from self._walk(1, rgs, sizes, self.min_block - 1)

    def _walk(self, i, rgs, sizes, deficit):
        n = len(self.taxa)
        if i == n:
            if deficit == 0:
                yield tuple(rgs)
            return
        remaining = n - i - 1
        for j in range(len(sizes) + 1):
            if j == len(sizes):
                new_deficit = deficit + self.min_block - 1
            else:
                new_deficit = deficit - (1 if sizes[j] < self.min_block else 0)
            if new_deficit > remaining:
                continue
            rgs[i] = j
            if j == len(sizes):
                sizes.append(1)
                yield from self._walk(i + 1, rgs, sizes, new_deficit)
                sizes.pop()
            else:
                sizes[j] += 1
                yield from self._walk(i + 1, rgs, sizes, new_deficit)
                sizes[j] -= 1

    def characters(self):
        for rgs in self:
            yield Character.from_rgs(self.taxa, rgs)


def all_partitions(taxa, min_block=1):
    """
    Every partition of taxa with all blocks of at least min_block taxa
    """
    return PartitionCursor(taxa, min_block).characters()


def brute_list(t, k):
    """
    Convex characters of t with all blocks of at least k taxa, in
    restricted-growth order over the sorted taxa
    """
    _guard(t.n)
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    if k > t.n:
        return []
    return [f for f in all_partitions(t.labels, k) if is_convex(t, f)]


def brute_count(t, k):
    """
    Number of convex characters of t with all blocks of at least k taxa
    """
    count = len(brute_list(t, k))
    logger.debug('brute force count for k=%d on %d taxa: %d', k, t.n, count)
    return count
