# -*- coding: utf-8 -*-
"""
Benchmark of the listing: for each tree family, k and time budget, the
largest n for which every g_k character is listed within the budget.

n is ramped upward from k and the ramp stops at the first listing that does
not finish in time. The clock is injectable so that the ramp decisions can
be replayed under a simulated clock.
"""


import logging
import time
from dataclasses import dataclass

from modules import g_t
from utils import display
from utils import enumeration
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRecord:
    family: str
    k: int
    budget: float
    max_n_completed: int
    characters_listed: int
    seed: int
    max_delay: float


def timed_listing(tree, k, budget, clock=time.perf_counter):
    """
    List every g_k character of tree unless the budget runs out.
    Returns:
        (completed, characters listed, largest gap between two characters)
    """
    start = clock()
    last = start
    listed = 0
    max_delay = 0.0
    for _ in enumeration.list_gk(tree, k):
        listed += 1
        now = clock()
        max_delay = max(max_delay, now - last)
        last = now
        if now - start > budget:
            return False, listed, max_delay
    return True, listed, max_delay


def bench_family(family, k, budget, seed=0, n_max=60, clock=time.perf_counter):
    """
    Ramp n upward from k for one (family, k, budget)
    """
    if budget <= 0:
        raise PreconditionError(f'budget must be positive, got {budget}')
    if family == 'fully_loaded' and k < 2:
        raise PreconditionError('the fully_loaded family needs k >= 2')

    best_n = k - 1
    best_listed = 0
    best_delay = 0.0
    for n in range(max(k, 1), n_max + 1):
        tree = g_t.generate_tree(family, n, k, seed if family == 'random' else None)
        completed, listed, delay = timed_listing(tree, k, budget, clock)
        logger.info('%s k=%d n=%d: %s %d characters', family, k, n, 'done' if completed else 'stopped after', listed)
        if not completed:
            break
        best_n, best_listed, best_delay = n, listed, delay

    return BenchRecord(family=family, k=k, budget=budget, max_n_completed=best_n,
                       characters_listed=best_listed, seed=seed, max_delay=best_delay)


def run_bench(families, k_values, budgets, seed=0, n_max=60, clock=time.perf_counter):
    records = []
    for family in families:
        for k in k_values:
            for budget in budgets:
                records.append(bench_family(family, k, budget, seed, n_max, clock))
    return records


def bench_listing_analysis(dic):
    """
    Bench analysis using parameters stored in the dic
    """
    families = dic["families_bench"]
    k_values = dic["k_values_bench"]
    budgets = dic["budgets_bench"]
    seed = dic["seed_bench"]
    n_max = dic["n_max_bench"]

    records = run_bench(families, k_values, budgets, seed, n_max)

    display.display_bench_records(records)
    return 0
