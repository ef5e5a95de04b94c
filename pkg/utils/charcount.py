# -*- coding: utf-8 -*-
"""
Exact counting of g_k, the number of convex characters of a tree whose
blocks all hold at least k taxa, together with the closed forms and
recurrences that bound it.

Counting DP: the tree is rooted at taxon 0. For every edge (v, parent) the
vector vec[0..k] counts the ways of labelling the subtree of v:
    vec[0]  no block crosses the edge, every block below is complete
    vec[j]  exactly one block crosses the edge and holds min(j, k) taxa below it
Two children are combined by a convolution capped at k.
"""


import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from utils import maths_functions
from utils.errors import PreconditionError
from utils.tree_core import delete_taxa, cherries, iter_bits, restrict, side_masks, tripartitions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrowthRate:
    """
    Exponential growth rates of the g_k extremes:
    alpha    : maximum (caterpillar), root of x^k - x^(k-1) - 1
    min_rate : minimum (fully k-loaded), phi^(1/(k-1))
    """
    k: int
    alpha: float
    residual: float
    min_rate: float


# ----------------------------------------------------------------------
# dynamic programming
# ----------------------------------------------------------------------

def count_gk(t, k):
    """
    Number of convex characters of t in which every block holds at least k taxa
    """
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    if t.n < k:
        return 0
    return _count_cached(t, k)


# lru_cache keys on the canonical Newick of the tree; concurrent misses may
# compute the same entry twice, the stored values are identical
@lru_cache(maxsize=65536)
def _count_cached(t, k):
    single = 1 if k == 1 else 0
    if t.n == 1:
        return single

    order, parent, children = t.rooting
    vectors = [None] * t.vertex_count
    for v in reversed(order[1:]):
        vec = [0] * (k + 1)
        if t.is_leaf(v):
            vec[0] = single
            vec[1] = 1
        else:
            a, b = (vectors[c] for c in children[v])
            vec[0] = a[0] * b[0]
            for s in range(1, k + 1):
                # the block from one side continues upward
                vec[s] += a[s] * b[0] + a[0] * b[s]
            for s in range(1, k + 1):
                if not a[s]:
                    continue
                for u in range(1, k + 1):
                    if not b[u]:
                        continue
                    merged = min(s + u, k)
                    ways = a[s] * b[u]
                    vec[merged] += ways
                    if merged == k:
                        # the merged block may also end at v
                        vec[0] += ways
            for c in children[v]:
                vectors[c] = None
        vectors[v] = vec
        logger.debug('k=%d vertex %d vector %s', k, v, vec)

    top = vectors[children[0][0]]
    total = top[0] * single + sum(top[s] for s in range(max(1, k - 1), k + 1))
    return total


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def g1_closed(n):
    """
    g_1(n) = F(2n - 1)
    """
    if n < 1:
        raise PreconditionError(f'g_1 closed form needs n >= 1, got {n}')
    return maths_functions.fibonacci(2 * n - 1)


def g2_closed(n):
    """
    g_2(n) = F(n - 1)
    """
    if n < 1:
        raise PreconditionError(f'g_2 closed form needs n >= 1, got {n}')
    return maths_functions.fibonacci(n - 1)


@lru_cache(maxsize=None)
def gk_caterpillar(n, k):
    """
    g_k(Cat_n) from g(n) = g(n-1) + g(n-k) with g = 0 below k and g(k) = 1.
    For k = 1 the value is the topology-free g_1(n).
    """
    if n < 0 or k < 1:
        raise PreconditionError(f'caterpillar recurrence needs n >= 0 and k >= 1, got n={n}, k={k}')
    if k == 1:
        return g1_closed(n) if n >= 1 else 0
    values = [0] * (n + 1)
    for m in range(k, n + 1):
        values[m] = 1 if m == k else values[m - 1] + values[m - k]
    return values[n]


def gk_fully_loaded(n, k):
    """
    g_k of every fully k-loaded tree on n taxa: g_2(ceil(n / (k-1)))
    """
    if k < 2:
        raise PreconditionError(f'fully loaded trees need k >= 2, got {k}')
    if n < k:
        raise PreconditionError(f'fully loaded trees need n >= k, got n={n}, k={k}')
    return g2_closed(-(-n // (k - 1)))


def gk_minimum(n, k):
    """
    Minimum of g_k over all trees on n taxa, for every k >= 1
    """
    if n < k:
        return 0
    if k == 1:
        return g1_closed(n)
    return gk_fully_loaded(n, k)


def gk_maximum(n, k):
    """
    Maximum of g_k over all trees on n taxa, for every k >= 1
    """
    if n < k:
        return 0
    return gk_caterpillar(n, k)


def g3_caterpillar_closed(n):
    return maths_functions.g3_caterpillar_float(n)


def g1_float(n):
    return maths_functions.binet_floor(2 * n - 1)


def g2_float(n):
    return maths_functions.binet_floor(n - 1)


def growth_rate(k):
    """
    Growth rates of the maximum and minimum of g_k.
    k = 1 is reported as phi^2 for both (the g_1 rate), residual 0
    """
    if k < 1:
        raise PreconditionError(f'k must be at least 1, got {k}')
    phi = maths_functions.PHI
    if k == 1:
        return GrowthRate(k=1, alpha=phi ** 2, residual=0.0, min_rate=phi ** 2)
    poly = maths_functions.characteristic_polynomial(k)
    alpha = maths_functions.bisection_root(poly, 1.0, 2.0)
    residual = abs(float(poly(alpha)))
    return GrowthRate(k=k, alpha=alpha, residual=residual, min_rate=phi ** (1 / (k - 1)))


def rate_table(kmax):
    if kmax < 1:
        raise PreconditionError(f'kmax must be at least 1, got {kmax}')
    return [growth_rate(k) for k in range(1, kmax + 1)]


# ----------------------------------------------------------------------
# recurrence checks
# ----------------------------------------------------------------------

def decrease_recurrence_check(t, k, subset=None):
    """
    For a split A|B with |A| = k and x in A, check
    g_k(T) = g_k(T - A) + g_k(T - {x})
    """
    if k < 2:
        raise PreconditionError(f'the split recurrence needs k >= 2, got {k}')
    sides = side_masks(t)
    if subset is None:
        candidates = sorted(side for side in sides if side.bit_count() == k)
        if not candidates:
            raise PreconditionError(f'tree has no split side with exactly k={k} taxa')
        a_mask = candidates[0]
    else:
        a_mask = t.mask(subset)
        if a_mask not in sides or a_mask.bit_count() != k:
            raise PreconditionError(f'{sorted(subset)} is not a split side of size k={k}')

    a_labels = t.labels_of(a_mask)
    x = t.labels[next(iter_bits(a_mask))]
    lhs = count_gk(t, k)
    rhs = count_gk(delete_taxa(t, a_labels), k) + count_gk(delete_taxa(t, {x}), k)
    logger.debug('decrease recurrence k=%d A=%s: %d vs %d', k, sorted(a_labels), lhs, rhs)
    return lhs == rhs


def applicable_tripartitions(t, k):
    """
    Tripartitions with roles assigned so that |B| = k-1, 1 <= |C| <= k-1 and |A| > 2(k-1)
    """
    for tp in tripartitions(t):
        for a, b, c in permutations(tp.parts):
            if len(b) == k - 1 and 1 <= len(c) <= k - 1 and len(a) > 2 * (k - 1):
                yield tp.with_roles(a, b, c)


def tripartition_recurrence_check(t, k, a, b, c):
    """
    For a tripartition A|B|C with |B| = k-1, check
    g(T) = g(T|AuB) g(T|C) + g(T|A) g(T|BuC) + g(T|AuB) g(T|BuC)
    """
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    if not any(sorted(map(sorted, tp.parts)) == sorted(map(sorted, (a, b, c))) for tp in tripartitions(t)):
        raise PreconditionError(f'{sorted(a)}|{sorted(b)}|{sorted(c)} is not a tripartition of the tree')
    if len(b) != k - 1 or not 1 <= len(c) <= k - 1 or len(a) <= 2 * (k - 1):
        raise PreconditionError(f'tripartition does not satisfy the size bounds for k={k}')

    def g(part):
        return count_gk(restrict(t, part), k)

    ab = g(a | b)
    bc = g(b | c)
    lhs = count_gk(t, k)
    rhs = ab * g(c) + g(a) * bc + ab * bc
    logger.debug('tripartition recurrence k=%d |A|=%d |B|=%d |C|=%d: %d vs %d', k, len(a), len(b), len(c), lhs, rhs)
    return lhs == rhs


def cherry_bound(t):
    """
    Upper bound on g_3 from the cherry count t_c: g_3 of the fully 3-loaded
    tree on 2n - 2t_c taxa, i.e. g_2(n - t_c)
    """
    if t.n < 4:
        raise PreconditionError(f'cherry bound needs at least 4 taxa, got {t.n}')
    return gk_fully_loaded(2 * t.n - 2 * len(cherries(t)), 3)
