# -*- coding: utf-8 -*-
"""
Unrooted binary phylogenetic trees: representation, Newick parsing and
canonical writing, restriction, splits, tripartitions, cherries and the
gluing operations used by the extremal constructions.

Leaves are the vertices 0..n-1 and vertex i carries the i-th taxon label in
sorted order, so taxon subsets are handled as integer bitmasks.
"""


import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import dendropy
from dendropy.utility.error import DataParseError

from utils.errors import NewickError, PreconditionError, UnknownTaxonError

logger = logging.getLogger(__name__)

_RESERVED = set('(),;:')


class Tree:
    """
    Immutable unrooted binary tree whose leaves are labelled by distinct taxa.
    Build instances with build_tree or parse_newick, not with the constructor.
    Two trees are equal when they are isomorphic with identical leaf labels.
    """

    def __init__(self, labels, adjacency):
        self.labels = tuple(labels)
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.index = {label: i for i, label in enumerate(self.labels)}

    # -- size and taxa --------------------------------------------------

    @property
    def n(self):
        return len(self.labels)

    @property
    def taxa(self):
        return frozenset(self.labels)

    @property
    def vertex_count(self):
        return len(self.adjacency)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def is_leaf(self, v):
        return v < self.n

    def taxon_id(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise UnknownTaxonError(f'unknown taxon {label!r}') from None

    def mask(self, labels):
        """
        Bitmask of a collection of taxon labels
        """
        value = 0
        for label in labels:
            value |= 1 << self.taxon_id(label)
        return value

    def labels_of(self, mask):
        return frozenset(self.labels[i] for i in iter_bits(mask))

    def edges(self):
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    # -- rooting at taxon 0 ---------------------------------------------

    @cached_property
    def rooting(self):
        """
        (preorder, parent, children) of the tree rooted at leaf 0
        """
        parent = [-1] * self.vertex_count
        children = [[] for _ in range(self.vertex_count)]
        order = [0]
        stack = [0]
        seen = [False] * self.vertex_count
        seen[0] = True
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    children[v].append(w)
                    order.append(w)
                    stack.append(w)
        return tuple(order), tuple(parent), tuple(tuple(c) for c in children)

    @cached_property
    def below(self):
        """
        below[v] : bitmask of the taxa in the subtree of v (rooted at leaf 0)
        """
        order, parent, children = self.rooting
        below = [0] * self.vertex_count
        for v in reversed(order):
            if self.is_leaf(v):
                below[v] = 1 << v
            for c in children[v]:
                below[v] |= below[c]
        return tuple(below)

    @cached_property
    def split_masks(self):
        """
        Far-side bitmask of every edge (v, parent(v)), in preorder
        """
        order, parent, children = self.rooting
        return tuple(self.below[v] for v in order[1:])

    # -- identity -------------------------------------------------------

    @cached_property
    def newick(self):
        return write_newick(self)

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.newick == other.newick

    def __hash__(self):
        return hash(self.newick)

    def __repr__(self):
        return f'Tree({self.newick!r})'

    def __str__(self):
        return self.newick


@dataclass(frozen=True)
class Split:
    side_a: frozenset
    side_b: frozenset

    def __str__(self):
        return ','.join(sorted(self.side_a)) + '|' + ','.join(sorted(self.side_b))


@dataclass(frozen=True)
class Tripartition:
    part_a: frozenset
    part_b: frozenset
    part_c: frozenset
    center: int

    @property
    def parts(self):
        return self.part_a, self.part_b, self.part_c

    def with_roles(self, a, b, c):
        """
        Same vertex, parts reassigned to the roles A, B, C (given as label sets)
        """
        roles = (frozenset(a), frozenset(b), frozenset(c))
        if sorted(map(sorted, roles)) != sorted(map(sorted, self.parts)):
            raise PreconditionError('roles must be a permutation of the tripartition parts')
        return Tripartition(*roles, center=self.center)

    def __str__(self):
        return '|'.join(','.join(sorted(part)) for part in self.parts)


def iter_bits(mask):
    """
    Indices of the set bits of mask, increasing
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ----------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------

def build_tree(edges, leaf_labels):
    """
    Build a Tree from integer vertex ids: edges is an iterable of pairs and
    leaf_labels maps each leaf vertex to its label. Unlabelled vertices of
    degree 2 are suppressed; everything else must be a leaf (degree 1) or an
    internal vertex of degree 3.
    """
    adjacency = {v: set() for v in leaf_labels}
    edge_count = 0
    for u, v in edges:
        if u == v:
            raise PreconditionError('self loop in tree edges')
        adjacency.setdefault(u, set())
        adjacency.setdefault(v, set())
        if v in adjacency[u]:
            raise PreconditionError('repeated edge in tree edges')
        adjacency[u].add(v)
        adjacency[v].add(u)
        edge_count += 1

    if not leaf_labels:
        raise PreconditionError('a tree needs at least one taxon')
    if len(set(leaf_labels.values())) != len(leaf_labels):
        raise PreconditionError('duplicate taxon label')
    for label in leaf_labels.values():
        _check_label(label)
    if edge_count != len(adjacency) - 1 or not _connected(adjacency):
        raise PreconditionError('edges do not form a tree')

    # suppress unlabelled degree-2 vertices
    pending = [v for v, nbrs in adjacency.items() if v not in leaf_labels and len(nbrs) == 2]
    for v in pending:
        x, y = adjacency.pop(v)
        adjacency[x].discard(v)
        adjacency[y].discard(v)
        adjacency[x].add(y)
        adjacency[y].add(x)
        logger.debug('suppressed degree-2 vertex %s', v)

    single = len(adjacency) == 1
    for v, nbrs in adjacency.items():
        if v in leaf_labels:
            if len(nbrs) != 1 and not single:
                raise PreconditionError(f'taxon {leaf_labels[v]!r} is not on a leaf')
        elif len(nbrs) != 3:
            raise PreconditionError(f'non-binary vertex of degree {len(nbrs)}')

    # renumber : leaves in label order, then internal vertices breadth first from taxon 0
    leaves = sorted(leaf_labels, key=leaf_labels.get)
    new_id = {v: i for i, v in enumerate(leaves)}
    queue = deque([leaves[0]])
    seen = {leaves[0]}
    while queue:
        v = queue.popleft()
        for w in sorted(adjacency[v]):
            if w not in seen:
                seen.add(w)
                queue.append(w)
                if w not in new_id:
                    new_id[w] = len(new_id)

    new_adjacency = [None] * len(new_id)
    for v, i in new_id.items():
        new_adjacency[i] = [new_id[w] for w in adjacency[v]]
    return Tree([leaf_labels[v] for v in leaves], new_adjacency)


def _check_label(label):
    if not isinstance(label, str) or not label:
        raise PreconditionError(f'invalid taxon label {label!r}')
    if any(ch in _RESERVED or ch.isspace() for ch in label):
        raise PreconditionError(f'taxon label {label!r} contains whitespace or a reserved character')


def _connected(adjacency):
    start = next(iter(adjacency))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adjacency)


# ----------------------------------------------------------------------
# Newick
# ----------------------------------------------------------------------

def parse_newick(text):
    """
    Parse one semicolon-terminated Newick tree with dendropy. Branch lengths,
    internal labels and [comments] are discarded; a degree-2 root is suppressed.
    """
    if not text.strip():
        raise NewickError('empty Newick string')
    _check_structure(text)

    try:
        source = dendropy.Tree.get(data=text, schema='newick', preserve_underscores=True,
                                   suppress_leaf_node_taxa=True, suppress_internal_node_taxa=True)
    except DataParseError as err:
        message = getattr(err, 'message', None) or str(err)
        raise NewickError(message, column=getattr(err, 'col_num', None)) from None

    ids = {}
    edges = []
    leaf_labels = {}
    seen = set()
    for node in source.preorder_node_iter():
        v = ids[id(node)] = len(ids)
        if node.parent_node is not None:
            edges.append((ids[id(node.parent_node)], v))
        length = node.edge.length
        if length is not None and not isinstance(length, (int, float)):
            raise NewickError(f'invalid branch length {length!r}')
        if node.is_leaf():
            label = node.label
            if not label:
                raise NewickError('empty label')
            if label in seen:
                raise NewickError(f'duplicate label {label!r}')
            seen.add(label)
            leaf_labels[v] = label

    try:
        return build_tree(edges, leaf_labels)
    except PreconditionError as err:
        raise NewickError(str(err)) from None


def _check_structure(text):
    """
    Bracket balance, empty labels and text after the semicolon, reported
    with 1-based columns
    """
    depth = 0
    previous = None
    pos = 0
    while pos < len(text):
        ch = text[pos]
        column = pos + 1
        if ch.isspace():
            pos += 1
            continue
        if ch == '[':
            end = text.find(']', pos)
            if end < 0:
                raise NewickError('unterminated comment', column=column)
            pos = end + 1
            continue
        if previous == ';':
            raise NewickError('text after the terminating semicolon', column=column)
        if ch in ',)' and previous in ('(', ','):
            raise NewickError('empty label', column=column)

        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise NewickError("unbalanced ')'", column=column)
        elif ch == ';' and depth:
            raise NewickError("unbalanced '(' before ';'", column=column)
        elif ch == "'":
            # quoted label, '' escapes a quote
            end = pos
            while True:
                end = text.find("'", end + 1)
                if end < 0:
                    raise NewickError('unterminated quoted label', column=column)
                if text[end + 1:end + 2] != "'":
                    break
                end += 1
            pos = end
        previous = ch
        pos += 1

    if previous != ';':
        raise NewickError("missing terminating ';'")


def write_newick(t):
    """
    Canonical Newick: rooted on the edge of the smallest taxon, children
    ordered by the smallest taxon they contain
    """
    if t.n == 1:
        return t.labels[0] + ';'

    order, parent, children = t.rooting
    smallest = [0] * t.vertex_count
    text = [''] * t.vertex_count
    for v in reversed(order[1:]):
        if t.is_leaf(v):
            smallest[v] = v
            text[v] = t.labels[v]
        else:
            kids = sorted(children[v], key=smallest.__getitem__)
            smallest[v] = smallest[kids[0]]
            text[v] = '(' + ','.join(text[c] for c in kids) + ')'
    first = children[0][0]
    return '(' + t.labels[0] + ',' + text[first] + ');'


# ----------------------------------------------------------------------
# restriction
# ----------------------------------------------------------------------

def restrict(t, subset):
    """
    T|subset : minimal spanning subtree of subset with degree-2 vertices suppressed
    """
    subset = set(subset)
    if not subset:
        raise PreconditionError('cannot restrict a tree to an empty taxon set')
    selected = t.mask(subset)
    if selected == t.full_mask:
        return t
    if len(subset) == 1:
        (label,) = subset
        return build_tree([], {0: label})

    order, parent, children = t.rooting
    below = t.below
    edges = []
    for v in order[1:]:
        inside = below[v] & selected
        if inside and inside != selected:
            edges.append((v, parent[v]))
    leaf_labels = {i: t.labels[i] for i in iter_bits(selected)}
    return build_tree(edges, leaf_labels)


def delete_taxa(t, subset):
    """
    T minus subset, i.e. T|(X - subset)
    """
    removed = t.mask(subset)
    if removed == t.full_mask:
        raise PreconditionError('cannot delete every taxon of a tree')
    if not removed:
        return t
    return restrict(t, t.labels_of(t.full_mask ^ removed))


def relabel(t, mapping):
    """
    Rename taxa; labels missing from mapping are kept
    """
    for label in mapping:
        t.taxon_id(label)
    leaf_labels = {i: mapping.get(label, label) for i, label in enumerate(t.labels)}
    return build_tree(t.edges(), leaf_labels)


# ----------------------------------------------------------------------
# splits, cherries and tripartitions
# ----------------------------------------------------------------------

def splits(t):
    """
    One Split per edge; side_b is the side away from the smallest taxon
    """
    full = t.full_mask
    return [Split(t.labels_of(full ^ side), t.labels_of(side)) for side in t.split_masks]


def side_masks(t):
    """
    Set of both sides of every split, as bitmasks
    """
    full = t.full_mask
    sides = set()
    for side in t.split_masks:
        sides.add(side)
        sides.add(full ^ side)
    return sides


def is_split_side(t, side):
    return t.mask(side) in side_masks(t)


def find_bounded_split(t, k):
    """
    Split A|B with k <= |B| <= 2(k-1): walk away from the smallest taxon,
    stepping onto an outgoing edge whose far side still holds at least k taxa
    """
    if k < 2:
        raise PreconditionError(f'bounded split needs k >= 2, got {k}')
    if t.n <= k:
        raise PreconditionError(f'bounded split needs more than k={k} taxa, tree has {t.n}')

    order, parent, children = t.rooting
    below = t.below
    v = children[0][0]
    while True:
        heavy = [c for c in children[v] if below[c].bit_count() >= k]
        if not heavy:
            break
        v = min(heavy, key=lambda c: (below[c] & -below[c]))
    logger.debug('bounded split for k=%d ends at vertex %d (%d taxa)', k, v, below[v].bit_count())
    return Split(t.labels_of(t.full_mask ^ below[v]), t.labels_of(below[v]))


def cherries(t):
    """
    Unordered pairs of taxa with a common neighbour; a 2-taxon tree is one pair
    """
    if t.n == 1:
        return []
    if t.n == 2:
        return [tuple(sorted(t.labels))]
    pairs = []
    for v in range(t.n, t.vertex_count):
        leaves = [w for w in t.adjacency[v] if t.is_leaf(w)]
        for i in range(len(leaves)):
            for j in range(i + 1, len(leaves)):
                pairs.append(tuple(sorted((t.labels[leaves[i]], t.labels[leaves[j]]))))
    return sorted(pairs)


def tripartitions(t):
    """
    One Tripartition per internal vertex, parts ordered by their smallest taxon
    """
    order, parent, children = t.rooting
    below = t.below
    full = t.full_mask
    result = []
    for v in range(t.n, t.vertex_count):
        sides = [below[c] for c in children[v]] + [full ^ below[v]]
        sides.sort(key=lambda side: side & -side)
        result.append(Tripartition(*(t.labels_of(side) for side in sides), center=v))
    return result


# ----------------------------------------------------------------------
# gluing
# ----------------------------------------------------------------------

def graft(host, anchor, pendant):
    """
    Glue two trees sharing the taxon anchor: the anchor leaf disappears from
    both and its two neighbours are joined
    """
    host_anchor = host.taxon_id(anchor)
    pendant_anchor = pendant.taxon_id(anchor)
    overlap = (host.taxa & pendant.taxa) - {anchor}
    if overlap:
        raise PreconditionError(f'trees share taxa other than the anchor: {sorted(overlap)}')
    if host.n == 1:
        return restrict(pendant, pendant.taxa - {anchor})
    if pendant.n == 1:
        return restrict(host, host.taxa - {anchor})

    offset = host.vertex_count
    edges = []
    for u, v in host.edges():
        if host_anchor not in (u, v):
            edges.append((u, v))
    for u, v in pendant.edges():
        if pendant_anchor not in (u, v):
            edges.append((u + offset, v + offset))
    (h,) = host.adjacency[host_anchor]
    (p,) = pendant.adjacency[pendant_anchor]
    edges.append((h, p + offset))

    leaf_labels = {i: label for i, label in enumerate(host.labels) if i != host_anchor}
    for i, label in enumerate(pendant.labels):
        if i != pendant_anchor:
            leaf_labels[i + offset] = label
    return build_tree(edges, leaf_labels)


def pendant_tree(t, side, anchor):
    """
    Pendant subtree of t on side (a split side), its attachment edge ending in
    a new leaf named anchor
    """
    side = frozenset(side)
    mask = t.mask(side)
    if mask not in side_masks(t):
        raise PreconditionError(f'{sorted(side)} is not the side of a split')
    if anchor in side:
        raise PreconditionError(f'anchor {anchor!r} is one of the pendant taxa')
    outside = t.labels[(t.full_mask ^ mask).bit_length() - 1]
    return relabel(restrict(t, side | {outside}), {outside: anchor})


def fresh_label(taken, stem='anchor'):
    """
    A taxon label not in taken
    """
    label = stem
    suffix = 0
    while label in taken:
        suffix += 1
        label = f'{stem}{suffix}'
    return label
