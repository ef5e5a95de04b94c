# -*- coding: utf-8 -*-
"""
Characters (partitions of the taxa), convexity and parsimony tests, and the
streaming listing of every convex character whose blocks hold at least k taxa.

Listing order: restricted-growth string over the sorted taxa, lexicographic.
Taxon i goes to block j (0 <= j <= number of blocks so far) and a choice is
kept only when the partial assignment still extends to a valid character,
which the feasibility DP below decides. No branch of the search is dead, so
the delay between two characters is polynomial.
"""


import logging
from dataclasses import dataclass

from utils.errors import NotAPartitionError, PreconditionError
from utils.tree_core import iter_bits

logger = logging.getLogger(__name__)

# feasibility state of an edge on which no block crosses
CLOSED = None
# tag of an open block that holds no assigned taxon yet
FREE = -1


@dataclass(frozen=True)
class Character:
    """
    Partition of a taxon set into blocks, in canonical order: taxa sorted
    inside each block, blocks sorted by their smallest taxon
    """
    blocks: tuple

    def __post_init__(self):
        blocks = []
        seen = set()
        for block in self.blocks:
            block = tuple(sorted(block))
            if not block:
                raise NotAPartitionError('empty block in character')
            if seen.intersection(block):
                raise NotAPartitionError(f'taxa in more than one block: {sorted(seen.intersection(block))}')
            seen.update(block)
            blocks.append(block)
        if not blocks:
            raise NotAPartitionError('character without blocks')
        blocks.sort(key=lambda block: block[0])
        object.__setattr__(self, 'blocks', tuple(blocks))

    @classmethod
    def from_rgs(cls, taxa, rgs):
        """
        Character from a restricted-growth string over the ordered taxa
        """
        if len(taxa) != len(rgs):
            raise NotAPartitionError('restricted-growth string and taxa differ in length')
        blocks = {}
        for label, j in zip(taxa, rgs):
            blocks.setdefault(j, []).append(label)
        return cls(tuple(blocks.values()))

    @classmethod
    def parse(cls, text, taxa=None):
        """
        Read 'a,b|c'. The compact form 'ab|c' is accepted when taxa are given
        and every taxon label is a single character
        """
        text = text.strip()
        if not text:
            raise NotAPartitionError('empty character text')
        compact = (taxa is not None and ',' not in text
                   and all(len(label) == 1 for label in taxa))
        blocks = []
        for part in text.split('|'):
            part = part.strip()
            if compact:
                labels = list(part)
            else:
                labels = [label.strip() for label in part.split(',')]
            if not part or any(not label for label in labels):
                raise NotAPartitionError(f'empty block or label in {text!r}')
            blocks.append(labels)
        for labels in blocks:
            if len(set(labels)) != len(labels):
                raise NotAPartitionError(f'repeated taxon in block {labels}')
        return cls(tuple(tuple(labels) for labels in blocks))

    @property
    def taxa(self):
        return frozenset(label for block in self.blocks for label in block)

    @property
    def min_block(self):
        return min(len(block) for block in self.blocks)

    def rgs(self):
        """
        Restricted-growth string over the sorted taxa
        """
        block_of = {label: j for j, block in enumerate(self.blocks) for label in block}
        return tuple(block_of[label] for label in sorted(block_of))

    def to_text(self):
        return '|'.join(','.join(block) for block in self.blocks)

    def to_json(self):
        return [list(block) for block in self.blocks]

    def __str__(self):
        return self.to_text()


def block_masks(t, f):
    """
    Bitmask of every block of f on t; f must partition the taxa of t
    """
    if f.taxa != t.taxa:
        missing = sorted(t.taxa - f.taxa)
        extra = sorted(f.taxa - t.taxa)
        raise NotAPartitionError(f'character does not partition the taxa (missing {missing}, unknown {extra})')
    return [t.mask(block) for block in f.blocks]


def is_convex(t, f):
    """
    True when the spanning subtrees of the blocks are vertex disjoint. A block
    uses an internal vertex exactly when it has taxa in two of its directions.
    """
    masks = block_masks(t, f)
    if len(masks) == 1:
        return True
    order, parent, children = t.rooting
    below = t.below
    full = t.full_mask
    for v in range(t.n, t.vertex_count):
        directions = [below[c] for c in children[v]] + [full ^ below[v]]
        users = 0
        for mask in masks:
            if sum(1 for side in directions if side & mask) >= 2:
                users += 1
                if users > 1:
                    return False
    return True


def parsimony_score(t, f):
    """
    Fitch parsimony score of the block labelling, rooted at taxon 0
    """
    masks = block_masks(t, f)
    if t.n == 1:
        return 0
    block_of = [0] * t.n
    for j, mask in enumerate(masks):
        for i in iter_bits(mask):
            block_of[i] = j

    order, parent, children = t.rooting
    state = [0] * t.vertex_count
    score = 0
    for v in reversed(order[1:]):
        if t.is_leaf(v):
            state[v] = 1 << block_of[v]
            continue
        a, b = (state[c] for c in children[v])
        if a & b:
            state[v] = a & b
        else:
            state[v] = a | b
            score += 1
    if not state[children[0][0]] & (1 << block_of[0]):
        score += 1
    return score


# ----------------------------------------------------------------------
# listing
# ----------------------------------------------------------------------

def _merge_tags(x, y):
    if x == y or y == FREE:
        return x
    if x == FREE:
        return y
    return None


def extendable(t, k, masks):
    """
    Whether the blocks masks (over a subset of the taxa, taxon 0 in block 0)
    extend to a convex character of t with all blocks of at least k taxa, the
    unassigned taxa joining existing blocks or forming new ones.

    Edge states are CLOSED or (tag, size): the block crossing the edge holds
    min(size, k) taxa below it and its assigned taxa belong to block tag.
    """
    if t.n == 1:
        return k <= 1
    order, parent, children = t.rooting
    below = t.below
    owner = {}
    for j, mask in enumerate(masks):
        for i in iter_bits(mask):
            owner[i] = j

    states = [None] * t.vertex_count
    for v in reversed(order[1:]):
        here = below[v]
        crossing = [j for j, mask in enumerate(masks) if mask & here and mask & ~here]
        if len(crossing) > 1:
            return False

        if t.is_leaf(v):
            tag = owner.get(v, FREE)
            new = {(tag, 1)}
            if k <= 1 and (tag == FREE or masks[tag] == here):
                new.add(CLOSED)
        else:
            a, b = (states[c] for c in children[v])
            new = set()
            for x in a:
                for y in b:
                    if x is CLOSED or y is CLOSED:
                        new.add(y if x is CLOSED else x)
                        continue
                    tag = _merge_tags(x[0], y[0])
                    if tag is None:
                        continue
                    size = min(x[1] + y[1], k)
                    new.add((tag, size))
                    if size == k and (tag == FREE or not masks[tag] & ~here):
                        new.add(CLOSED)
            for c in children[v]:
                states[c] = None

        if crossing:
            new = {s for s in new if s is not CLOSED and s[0] == crossing[0]}
        if not new:
            return False
        states[v] = new

    root_block = owner[0]
    for s in states[children[0][0]]:
        if s is CLOSED:
            if k <= 1 and masks[root_block] == 1:
                return True
        elif s[0] in (FREE, root_block) and min(s[1] + 1, k) == k:
            return True
    return False


def _check_prefix(t, prefix):
    prefix = tuple(prefix)
    if len(prefix) > t.n:
        raise PreconditionError(f'prefix of length {len(prefix)} is longer than the {t.n} taxa')
    top = -1
    for j in prefix:
        if not 0 <= j <= top + 1:
            raise PreconditionError(f'{prefix} is not a restricted-growth prefix')
        top = max(top, j)
    return prefix


def _search(t, k, masks, i, stop):
    """
    Depth-first over the feasible assignments of taxa i.. ; yields the block
    masks each time taxon stop - 1 is assigned
    """
    if i == stop:
        yield masks
        return
    bit = 1 << i
    for j in range(len(masks) + 1):
        opened = j == len(masks)
        if opened:
            masks.append(bit)
        else:
            masks[j] |= bit
        if extendable(t, k, masks):
            yield from _search(t, k, masks, i + 1, stop)
        if opened:
            masks.pop()
        else:
            masks[j] ^= bit


def _masks_of(prefix):
    masks = []
    for i, j in enumerate(prefix):
        if j == len(masks):
            masks.append(0)
        masks[j] |= 1 << i
    return masks


def list_gk(t, k, prefix=()):
    """
    Stream every convex character of t with all blocks of at least k taxa,
    lexicographic in restricted-growth order; with a prefix, only the
    characters whose restricted-growth string starts with it
    """
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    prefix = _check_prefix(t, prefix)
    if t.n < k:
        return

    masks = _masks_of(prefix) or [1]
    if not extendable(t, k, masks):
        return
    start = max(len(prefix), 1)

    emitted = 0
    for final in _search(t, k, masks, start, t.n):
        emitted += 1
        yield Character(tuple(tuple(t.labels[i] for i in iter_bits(mask)) for mask in final))
    logger.debug('listed %d characters for k=%d, prefix %s', emitted, k, prefix)


def gk_prefixes(t, k, depth):
    """
    Feasible restricted-growth prefixes of length min(depth, n), in listing order
    """
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    if depth < 1:
        raise PreconditionError(f'prefix depth must be positive, got {depth}')
    if t.n < k or not extendable(t, k, [1]):
        return []
    stop = min(depth, t.n)
    prefixes = []
    for masks in _search(t, k, [1], 1, stop):
        rgs = [0] * stop
        for j, mask in enumerate(masks):
            for i in iter_bits(mask):
                rgs[i] = j
        prefixes.append(tuple(rgs))
    return prefixes
