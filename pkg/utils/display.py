# -*- coding: utf-8 -*-
"""
Define the functions which display the results on standard output:
TSV for tables, JSON for structured results, Newick for trees
"""


import json

from utils.maths_functions import round_half_up


def display_counts(rows, file=None):
    """
    rows : (line number, n, k, count)
    """
    print('line\tn\tk\tcount', file=file)
    for line, n, k, count in rows:
        print(f'{line}\t{n}\t{k}\t{count}', file=file)


def display_character(f, fmt='text', file=None):
    if fmt == 'json':
        print(json.dumps(f.to_json()), file=file)
    else:
        print(f.to_text(), file=file)


def display_tree_characters(line, characters, file=None):
    """
    characters : JSON forms of the characters of the tree read on line
    """
    print(json.dumps({'line': line, 'characters': characters}), file=file)


def display_trees(trees, file=None):
    for tree in trees:
        print(tree.newick, file=file)


def rate_rows(rates):
    return [(rate.k, round_half_up(rate.min_rate), round_half_up(rate.alpha)) for rate in rates]


def display_rate_table(rates, file=None):
    """
    Minimum and maximum growth rate of g_k, 3 decimals rounded half up
    """
    print('k\tmin_rate\tmax_rate', file=file)
    for k, low, high in rate_rows(rates):
        print(f'{k}\t{low}\t{high}', file=file)


BENCH_COLUMNS = ('family', 'k', 'budget', 'max_n_completed', 'characters_listed', 'seed', 'max_delay')


def display_bench_records(records, file=None):
    print('\t'.join(BENCH_COLUMNS), file=file)
    for record in records:
        print('\t'.join(str(getattr(record, column)) for column in BENCH_COLUMNS), file=file)


def display_json(obj, file=None):
    print(json.dumps(obj, indent=2), file=file)


def display_report(results, file=None):
    """
    results : (check name, passed, detail)
    """
    width = max((len(name) for name, _, _ in results), default=0)
    for name, passed, detail in results:
        status = 'PASS' if passed else 'FAIL'
        print(f'{name:<{width}}  {status}  {detail}', file=file)
    failed = sum(1 for _, passed, _ in results if not passed)
    print(f'{len(results) - failed} passed, {failed} failed', file=file)
