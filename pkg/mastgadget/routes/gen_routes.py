"""
Random instance generators
"""

from mastgadget.services.formats import collection_to_text, graph_to_text
from mastgadget.services.generator import random_collection, random_graph
from mastgadget.utils.error_handler import EXIT_YES, ValidationError, handle_cli_error


def register(subparsers):
    parser = subparsers.add_parser('gen', help='seeded random graphs and tree collections')
    parser.add_argument('kind', choices=('graph', 'trees'))
    parser.add_argument('--n', type=int, required=True, help='vertices or leaves')
    parser.add_argument('--m', type=int, help='edges (graph)')
    parser.add_argument('--k', type=int, help='trees (trees)')
    parser.add_argument('--moves', type=int, default=2, help='max regrafts per tree (trees)')
    parser.add_argument('--seed', type=int, required=True)
    parser.set_defaults(handler=gen)


@handle_cli_error
def gen(args) -> int:
    if args.kind == 'graph':
        if args.m is None:
            raise ValidationError("gen graph needs --m")
        print(graph_to_text(random_graph(args.n, args.m, args.seed)), end='')
        return EXIT_YES

    if args.k is None:
        raise ValidationError("gen trees needs --k")
    coll = random_collection(args.n, args.k, args.seed, moves=args.moves)
    print(collection_to_text(coll, {'n': coll.n, 'k': coll.k, 'D': coll.max_degree}), end='')
    return EXIT_YES
