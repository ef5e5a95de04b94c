# -*- coding: utf-8 -*-
"""
Generators of the extremal tree families (caterpillars maximize g_k, fully
k-loaded trees minimize it), uniform random trees, and the tree
transformations whose effect on g_k is checked by the property suites.

A fully k-loaded tree on n taxa is a scaffold tree on ceil(n/(k-1)) leaves
in which every scaffold leaf is replaced by a pendant subtree on k-1 taxa,
except at most one (the residue) holding n mod (k-1) taxa.
"""


import logging
import string
from dataclasses import dataclass, field

import numpy as np

from utils.errors import PreconditionError
from utils.tree_core import (build_tree, cherries, fresh_label, graft, is_split_side, pendant_tree,
                             relabel, restrict, side_masks)

logger = logging.getLogger(__name__)


def default_labels(n):
    """
    'a'..'z' up to 26 taxa, then zero-padded 't01', 't02', ... so that the
    label order is the index order
    """
    if n < 0:
        raise PreconditionError(f'number of taxa must be non-negative, got {n}')
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    width = len(str(n))
    return [f't{i:0{width}d}' for i in range(1, n + 1)]


def _check_labels(n, labels):
    if labels is None:
        return default_labels(n)
    labels = list(labels)
    if len(labels) != n:
        raise PreconditionError(f'{n} taxa requested but {len(labels)} labels given')
    if len(set(labels)) != n:
        raise PreconditionError('duplicate taxon labels')
    return labels


def _scaffold_labels(m, taken):
    taken = set(taken)
    width = len(str(m))
    labels = []
    for i in range(1, m + 1):
        label = fresh_label(taken, stem=f'S{i:0{width}d}')
        taken.add(label)
        labels.append(label)
    return labels


# ----------------------------------------------------------------------
# caterpillars
# ----------------------------------------------------------------------

def gen_caterpillar(n, labels=None):
    """
    Caterpillar with the taxa in spine order: labels[0], labels[1] form one
    cherry and labels[-2], labels[-1] the other
    """
    if n < 1:
        raise PreconditionError(f'a caterpillar needs at least one taxon, got {n}')
    labels = _check_labels(n, labels)
    leaf_labels = dict(enumerate(labels))
    if n == 1:
        return build_tree([], leaf_labels)
    if n == 2:
        return build_tree([(0, 1)], leaf_labels)
    if n == 3:
        return build_tree([(0, 3), (1, 3), (2, 3)], leaf_labels)

    spine = [n + j for j in range(n - 2)]
    edges = list(zip(spine, spine[1:]))
    edges += [(0, spine[0]), (1, spine[0]), (n - 2, spine[-1]), (n - 1, spine[-1])]
    for i in range(2, n - 2):
        edges.append((i, spine[i - 1]))
    return build_tree(edges, leaf_labels)


# ----------------------------------------------------------------------
# fully loaded trees
# ----------------------------------------------------------------------

@dataclass
class FullyLoadedSpec:
    """
    scaffold     : tree whose leaves are expanded
    pendants     : scaffold leaf label -> pendant tree on its taxa plus that
                   scaffold label as the attachment leaf
    residue_leaf : scaffold leaf carrying n mod (k-1) taxa, None when k-1 divides n
    """
    n: int
    k: int
    scaffold: object
    residue_size: int
    residue_leaf: object = None
    pendants: dict = field(default_factory=dict)

    def check(self):
        q = self.k - 1
        if self.k < 2 or self.n < self.k:
            raise PreconditionError(f'fully loaded trees need k >= 2 and n >= k, got n={self.n}, k={self.k}')
        m = -(-self.n // q)
        if self.scaffold.n != m:
            raise PreconditionError(f'scaffold must have {m} leaves, has {self.scaffold.n}')
        if self.residue_size != self.n % q:
            raise PreconditionError(f'residue size must be {self.n % q}, got {self.residue_size}')
        if (self.residue_leaf is None) != (self.residue_size == 0):
            raise PreconditionError('a residue leaf is required exactly when the residue is non-empty')
        if set(self.pendants) != set(self.scaffold.labels):
            raise PreconditionError('every scaffold leaf needs exactly one pendant')

        seen = set()
        for anchor, pendant in self.pendants.items():
            if anchor not in pendant.taxa:
                raise PreconditionError(f'pendant of {anchor!r} does not contain its attachment leaf')
            taxa = pendant.taxa - {anchor}
            expected = self.residue_size if anchor == self.residue_leaf else q
            if len(taxa) != expected:
                raise PreconditionError(f'pendant of {anchor!r} holds {len(taxa)} taxa, expected {expected}')
            if seen & taxa:
                raise PreconditionError(f'pendants share taxa {sorted(seen & taxa)}')
            seen |= taxa
        if seen & set(self.scaffold.labels):
            raise PreconditionError('pendant taxa collide with scaffold labels')
        return self

    @property
    def taxa(self):
        return frozenset().union(*(p.taxa - {a} for a, p in self.pendants.items()))


def _chunks(labels, q, m, residue_index):
    sizes = [q] * m
    r = len(labels) - q * (m - 1)
    if r != q:
        sizes[residue_index] = r
    chunks = []
    start = 0
    for size in sizes:
        chunks.append(labels[start:start + size])
        start += size
    return chunks


def default_fully_loaded_spec(n, k, labels=None):
    """
    Caterpillar scaffold, caterpillar pendants filled with the taxa in order,
    residue on the last scaffold leaf of the spine
    """
    if k < 2 or n < k:
        raise PreconditionError(f'fully loaded trees need k >= 2 and n >= k, got n={n}, k={k}')
    labels = _check_labels(n, labels)
    q = k - 1
    m = -(-n // q)
    names = _scaffold_labels(m, labels)
    scaffold = gen_caterpillar(m, names)
    chunks = _chunks(labels, q, m, m - 1)
    pendants = {name: gen_caterpillar(len(chunk) + 1, [name] + chunk) for name, chunk in zip(names, chunks)}
    residue = n % q
    return FullyLoadedSpec(n=n, k=k, scaffold=scaffold, residue_size=residue,
                           residue_leaf=names[-1] if residue else None, pendants=pendants)


def random_fully_loaded_spec(n, k, seed, labels=None):
    """
    Random scaffold, random pendant shapes, random taxon assignment and residue leaf
    """
    if k < 2 or n < k:
        raise PreconditionError(f'fully loaded trees need k >= 2 and n >= k, got n={n}, k={k}')
    rng = np.random.default_rng(seed)
    labels = _check_labels(n, labels)
    labels = [labels[i] for i in rng.permutation(n)]
    q = k - 1
    m = -(-n // q)
    names = _scaffold_labels(m, labels)
    scaffold = random_tree(names, rng)
    residue_index = int(rng.integers(m))
    chunks = _chunks(labels, q, m, residue_index)
    pendants = {name: random_tree([name] + chunk, rng) for name, chunk in zip(names, chunks)}
    residue = n % q
    return FullyLoadedSpec(n=n, k=k, scaffold=scaffold, residue_size=residue,
                           residue_leaf=names[residue_index] if residue else None, pendants=pendants)


def gen_fully_loaded(n, k, spec=None, labels=None):
    """
    Fully k-loaded tree on n taxa, from spec or from the default caterpillar spec
    """
    if spec is None:
        spec = default_fully_loaded_spec(n, k, labels)
    elif (spec.n, spec.k) != (n, k):
        raise PreconditionError(f'spec is for n={spec.n}, k={spec.k}, not n={n}, k={k}')
    spec.check()
    tree = spec.scaffold
    for anchor in spec.scaffold.labels:
        tree = graft(tree, anchor, spec.pendants[anchor])
    return tree


def random_fully_loaded(n, k, seed, labels=None):
    return gen_fully_loaded(n, k, random_fully_loaded_spec(n, k, seed, labels))


def is_fully_loaded(t, k):
    """
    Whether t is fully k-loaded, with a witness spec.
    For n > 2(k-1) the pendants are the maximal split sides of at most k-1
    taxa; they partition the taxa and at most one may fall short of k-1.
    Returns:
        (bool, FullyLoadedSpec or None)
    """
    if k < 2:
        raise PreconditionError(f'fully loaded trees need k >= 2, got {k}')
    n = t.n
    q = k - 1
    if n < k:
        return False, None

    small = sorted((side for side in side_masks(t) if side.bit_count() <= q),
                   key=lambda side: (-side.bit_count(), side))
    if n <= 2 * q:
        exact = [side for side in small if side.bit_count() == q]
        if not exact:
            return False, None
        parts = [exact[0], t.full_mask ^ exact[0]]
    else:
        parts = []
        covered = 0
        for side in small:
            if not side & covered:
                parts.append(side)
                covered |= side
        # single taxa are split sides, so the maximal parts cover every taxon
        if sum(1 for side in parts if side.bit_count() < q) > 1:
            return False, None
    parts.sort(key=lambda side: side & -side)

    names = _scaffold_labels(len(parts), t.labels)
    representatives = {t.labels[(side & -side).bit_length() - 1]: name for side, name in zip(parts, names)}
    scaffold = relabel(restrict(t, representatives), representatives)
    pendants = {name: pendant_tree(t, t.labels_of(side), name) for side, name in zip(parts, names)}
    residue = n % q
    residue_leaf = None
    if residue:
        residue_leaf = next(name for side, name in zip(parts, names) if side.bit_count() == residue)
    spec = FullyLoadedSpec(n=n, k=k, scaffold=scaffold, residue_size=residue,
                           residue_leaf=residue_leaf, pendants=pendants)
    return True, spec


# ----------------------------------------------------------------------
# random trees
# ----------------------------------------------------------------------

def random_tree(labels, rng):
    """
    Uniform labelled binary topology by sequential edge subdivision: leaf i is
    attached to one of the 2i-3 edges of the current tree, chosen uniformly
    """
    labels = list(labels)
    n = len(labels)
    leaf_labels = dict(enumerate(labels))
    if n == 1:
        return build_tree([], leaf_labels)
    if n == 2:
        return build_tree([(0, 1)], leaf_labels)

    centre = n
    edges = [(0, centre), (1, centre), (2, centre)]
    next_id = n + 1
    for leaf in range(3, n):
        u, v = edges.pop(int(rng.integers(len(edges))))
        w = next_id
        next_id += 1
        edges += [(u, w), (w, v), (w, leaf)]
    return build_tree(edges, leaf_labels)


def gen_random(n, seed, labels=None):
    if n < 1:
        raise PreconditionError(f'a tree needs at least one taxon, got {n}')
    labels = _check_labels(n, labels)
    return random_tree(labels, np.random.default_rng(seed))


def all_trees(labels):
    """
    Every labelled binary topology on labels exactly once, (2n-5)!! of them
    for n >= 3, by inserting leaf i on each edge in turn
    """
    labels = list(labels)
    n = len(labels)
    leaf_labels = dict(enumerate(labels))
    if n < 4:
        yield gen_caterpillar(n, labels)
        return

    def insert(edges, leaf, next_id):
        if leaf == n:
            yield build_tree(edges, leaf_labels)
            return
        for i, (u, v) in enumerate(edges):
            grown = edges[:i] + edges[i + 1:] + [(u, next_id), (next_id, v), (next_id, leaf)]
            yield from insert(grown, leaf + 1, next_id + 1)

    yield from insert([(0, n), (1, n), (2, n)], 3, n + 1)


# ----------------------------------------------------------------------
# transformations
# ----------------------------------------------------------------------

def linearize(t, tp):
    """
    Replace the C subtree of the tripartition A|B|C by a caterpillar hung on
    the path between the A and B subtrees
    """
    a, b, c = tp.parts
    for name, part in (('A', a), ('B', b), ('C', c)):
        if len(part) < 2:
            raise PreconditionError(f'linearization needs |{name}| >= 2')
        if not is_split_side(t, part):
            raise PreconditionError(f'{name} = {sorted(part)} is not a split side')
    if (a | b | c) != t.taxa or len(a) + len(b) + len(c) != t.n:
        raise PreconditionError('A, B and C must partition the taxa')

    alpha = fresh_label(t.taxa, stem='alpha')
    beta = fresh_label(t.taxa | {alpha}, stem='beta')
    spine = gen_caterpillar(len(c) + 2, [alpha] + sorted(c) + [beta])
    tree = graft(spine, alpha, pendant_tree(t, a, alpha))
    return graft(tree, beta, pendant_tree(t, b, beta))


def replace_pendant(t, side, pendant, anchor):
    """
    Swap the pendant subtree of t on side for pendant, a tree on side plus the
    attachment leaf anchor
    """
    side = frozenset(side)
    if pendant.taxa != side | {anchor}:
        raise PreconditionError('replacement pendant must hold the side taxa and the anchor')
    if not is_split_side(t, side):
        raise PreconditionError(f'{sorted(side)} is not a split side')
    host = pendant_tree(t, t.taxa - side, anchor)
    return graft(host, anchor, pendant)


def local_fully_loaded(labels, k, anchor):
    """
    Fully k-loaded tree on labels (k <= |labels| <= 2(k-1)) with a single-edge
    scaffold, attached to anchor by subdividing the scaffold edge
    """
    labels = sorted(labels)
    if not k <= len(labels) <= 2 * (k - 1):
        raise PreconditionError(f'local replacement needs k <= |B| <= 2(k-1), got |B|={len(labels)}, k={k}')
    first, second = labels[:k - 1], labels[k - 1:]
    p1 = fresh_label(set(labels) | {anchor}, stem='p')
    p2 = fresh_label(set(labels) | {anchor, p1}, stem='p')
    tree = build_tree([(0, 3), (1, 3), (2, 3)], {0: anchor, 1: p1, 2: p2})
    tree = graft(tree, p1, gen_caterpillar(len(first) + 1, [p1] + first))
    return graft(tree, p2, gen_caterpillar(len(second) + 1, [p2] + second))


def replace_with_local_fully_loaded(t, s, k):
    """
    Replace the side_b subtree of the split s by the local fully k-loaded tree
    """
    if k < 2:
        raise PreconditionError(f'local replacement needs k >= 2, got {k}')
    b = frozenset(s.side_b)
    if not is_split_side(t, b) or (b | s.side_a) != t.taxa or b & s.side_a:
        raise PreconditionError(f'{s} is not a split of the tree')
    anchor = fresh_label(t.taxa, stem='anchor')
    result = replace_pendant(t, b, local_fully_loaded(b, k, anchor), anchor)
    logger.debug('replaced %d-taxon pendant by a local fully %d-loaded tree', len(b), k)
    return result


def double_lone_taxa(t):
    """
    Give every taxon outside a cherry a new sibling; the result is fully
    3-loaded on 2n - 2t_c taxa
    """
    if t.n < 2:
        raise PreconditionError('doubling needs at least two taxa')
    in_cherry = {label for pair in cherries(t) for label in pair}
    edges = t.edges()
    leaf_labels = dict(enumerate(t.labels))
    taken = set(t.labels)
    next_id = t.vertex_count
    for i, label in enumerate(t.labels):
        if label in in_cherry:
            continue
        (p,) = t.adjacency[i]
        edges.remove((min(i, p), max(i, p)))
        w, twin = next_id, next_id + 1
        next_id += 2
        edges += [(p, w), (w, i), (w, twin)]
        leaf_labels[twin] = fresh_label(taken, stem=f'{label}_twin')
        taken.add(leaf_labels[twin])
    return build_tree(edges, leaf_labels)
