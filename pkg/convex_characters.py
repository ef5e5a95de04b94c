# -*- coding: utf-8 -*-
"""
Convex characters of unrooted binary phylogenetic trees

Count, list and benchmark the convex characters whose blocks all hold at
least k taxa, generate the extremal tree families, print the growth-rate
table, verify the properties of g_k and solve convex character programming
instances.

    python convex_characters.py count data/trees/loaded_7.nwk --k 2
    python convex_characters.py list data/trees/loaded_7.nwk --k 3
    python convex_characters.py gen fully_loaded 7 --k 4
    python convex_characters.py rate --kmax 6
    python convex_characters.py bench --families caterpillar random --k 1 2 3 --budgets 1
    python convex_characters.py verify --nmax 9 --kmax 4 --samples 200
    python convex_characters.py solve data/instances/agreement.json

Exit status: 0 success, 1 domain error or failed verification, 2 unreadable
input or usage error, 3 listing truncated by --limit.
"""


import argparse
import logging
import sys

from modules import b_l
from modules import c_c
from modules import g_t
from modules import l_c
from modules import r_t
from modules import s_i
from modules import v_p
from utils import parameters_files
from utils.errors import ConvexCharacterError, ParameterFileError

logger = logging.getLogger('convex_characters')

ANALYSES = {
    'count': c_c.count_characters_analysis,
    'list': l_c.list_characters_analysis,
    'gen': g_t.generate_trees_analysis,
    'rate': r_t.rate_table_analysis,
    'bench': b_l.bench_listing_analysis,
    'verify': v_p.verify_properties_analysis,
    'solve': s_i.solve_instance_analysis,
}


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'must be a positive integer, got {value}')
    return value


def positive_float(text):
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f'must be positive, got {value}')
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog='convex_characters',
                                     description='Convex characters of unrooted binary phylogenetic trees')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for progress, -vv for DP traces')
    parser.add_argument('--save-param', metavar='PATH', help='save the analysis parameters to a .PARAM file')
    parser.add_argument('--upload-param', metavar='PATH',
                        help='run with the parameters of a .PARAM file instead of the command line ones')
    sub = parser.add_subparsers(dest='command', required=True)

    count = sub.add_parser('count', help='count the g_k characters of each tree')
    count.add_argument('tree_file', help="Newick file, one tree per line ('-' for stdin)")
    count.add_argument('--k', type=positive_int, default=1)

    listing = sub.add_parser('list', help='list the g_k characters in canonical order')
    listing.add_argument('tree_file', help="Newick file, one tree per line ('-' for stdin)")
    listing.add_argument('--k', type=positive_int, default=1)
    listing.add_argument('--limit', type=int, default=None, help='stop after this many characters (exit status 3)')
    listing.add_argument('--format', choices=('text', 'json'), default='text')

    gen = sub.add_parser('gen', help='generate trees in canonical Newick')
    gen.add_argument('family', choices=g_t.FAMILIES)
    gen.add_argument('n', type=positive_int)
    gen.add_argument('--k', type=positive_int, default=None)
    gen.add_argument('--seed', type=int, default=None)
    gen.add_argument('--count', type=positive_int, default=1)
    gen.add_argument('--output', metavar='PATH', default=None,
                     help='write the trees to a Newick file instead of standard output')

    rate = sub.add_parser('rate', help='growth rates of the minimum and maximum of g_k')
    rate.add_argument('--kmax', type=positive_int, default=6)

    bench = sub.add_parser('bench', help='largest n listed within a time budget')
    bench.add_argument('--families', nargs='+', choices=g_t.FAMILIES, default=['caterpillar', 'random'])
    bench.add_argument('--k', nargs='+', type=positive_int, default=[1, 2, 3, 4, 5, 6])
    bench.add_argument('--budgets', nargs='+', type=positive_float, default=[1.0])
    bench.add_argument('--seed', type=int, default=0)
    bench.add_argument('--n-max', type=positive_int, default=60)

    verify = sub.add_parser('verify', help='run the property suite')
    verify.add_argument('--nmax', type=positive_int, default=9)
    verify.add_argument('--kmax', type=positive_int, default=4)
    verify.add_argument('--samples', type=positive_int, default=200)
    verify.add_argument('--seed', type=int, default=0)

    solve = sub.add_parser('solve', help='solve a JSON convex character programming instance')
    solve.add_argument('instance_file', help="JSON instance ('-' for stdin)")
    solve.add_argument('--workers', type=positive_int, default=1)

    return parser


def build_parameters(args):
    """
    Parameter dictionnary of the analysis, keys suffixed by the analysis name
    """
    dic = dict()
    dic["analysis"] = args.command
    if args.command == 'count':
        dic["tree_file_count"] = args.tree_file
        dic["k_count"] = args.k
    elif args.command == 'list':
        dic["tree_file_list"] = args.tree_file
        dic["k_list"] = args.k
        dic["limit_list"] = args.limit
        dic["format_list"] = args.format
    elif args.command == 'gen':
        dic["family_gen"] = args.family
        dic["n_gen"] = args.n
        dic["k_gen"] = args.k
        dic["seed_gen"] = args.seed
        dic["count_gen"] = args.count
        dic["output_gen"] = args.output
    elif args.command == 'rate':
        dic["kmax_rate"] = args.kmax
    elif args.command == 'bench':
        dic["families_bench"] = args.families
        dic["k_values_bench"] = args.k
        dic["budgets_bench"] = args.budgets
        dic["seed_bench"] = args.seed
        dic["n_max_bench"] = args.n_max
    elif args.command == 'verify':
        dic["nmax_verify"] = args.nmax
        dic["kmax_verify"] = args.kmax
        dic["samples_verify"] = args.samples
        dic["seed_verify"] = args.seed
    elif args.command == 'solve':
        dic["instance_file_solve"] = args.instance_file
        dic["workers_solve"] = args.workers
    return dic


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    parameters = build_parameters(args)
    try:
        if args.save_param:
            parameters_files.save_param_file(parameters, *parameters_files.split_param_path(args.save_param))

        if args.upload_param:
            parameters = parameters_files.upload_param_file(*parameters_files.split_param_path(args.upload_param))
            if parameters.get("analysis") != args.command:
                raise ParameterFileError(f'{args.upload_param} holds parameters of '
                                         f'{parameters.get("analysis")!r}, not {args.command!r}')

        # Launch analysis
        return ANALYSES[args.command](parameters)
    except ConvexCharacterError as err:
        print(f'convex_characters {args.command}: error: {err}', file=sys.stderr)
        return err.exit_status
    except BrokenPipeError:
        return 0


if __name__ == '__main__':
    sys.exit(main())
