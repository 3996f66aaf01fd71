"""
Solver commands
"""

import logging

from mastgadget.services.formats import parse_collection, parse_graph, read_text
from mastgadget.services.graph_core import GraphService
from mastgadget.services.solvers import SolverService
from mastgadget.services.tree_core import serialize_tree
from mastgadget.utils.error_handler import EXIT_NO, EXIT_YES, ValidationError, handle_cli_error
from mastgadget.utils.helpers import format_vertices

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('solve', help='exact MAST, MCT and independent set solvers')
    parser.add_argument('problem', choices=('mast', 'mct', 'is'))
    parser.add_argument('--input', required=True, help='tree collection file, or graph file for is')
    parser.add_argument('--fpt', type=int, metavar='P', help='deletion budget for the branching solver')
    parser.add_argument('--cap', type=int, help='override the brute-force cap')
    parser.set_defaults(handler=solve)


@handle_cli_error
def solve(args) -> int:
    if args.cap is not None and args.cap < 1:
        raise ValidationError("--cap must be positive")
    text = read_text(args.input)

    if args.problem == 'is':
        if args.fpt is not None:
            raise ValidationError("--fpt applies to mast and mct only")
        best = GraphService(is_cap=args.cap).max_independent_set(parse_graph(text))
        print(f"size {best.size}")
        print(f"witness {format_vertices(best.witness)}")
        return EXIT_YES

    _, coll = parse_collection(text)
    solvers = SolverService(mast_cap=args.cap, mct_cap=args.cap)

    if args.fpt is not None:
        run = solvers.mast_fpt if args.problem == 'mast' else solvers.mct_fpt
        witness = run(coll, args.fpt)
        if witness is None:
            print('no')
            return EXIT_NO
        print('yes')
        print(f"size {witness.size}")
        print(serialize_tree(witness))
        return EXIT_YES

    run = solvers.mast_bruteforce if args.problem == 'mast' else solvers.mct_bruteforce
    solution = run(coll)
    print(f"size {solution.size}")
    print(serialize_tree(solution.witness))
    return EXIT_YES
