"""
Reduction verification harness command
"""

import logging
import random

from mastgadget.config import config
from mastgadget.services.formats import parse_graph, read_text
from mastgadget.services.generator import random_graph
from mastgadget.services.reductions import ReductionService
from mastgadget.utils.error_handler import EXIT_NO, EXIT_YES, ValidationError, handle_cli_error

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser('verify', help='check IS and gadget answers agree')
    parser.add_argument('--graph', help='graph file')
    parser.add_argument('--k', type=int, required=True)
    parser.add_argument('--mode', choices=('mast', 'mct'), required=True)
    parser.add_argument('--samples', type=int, default=0, help='additional random graphs')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--repair', action='store_true', help='include the degree-repair tree (mct)')
    parser.set_defaults(handler=verify)


def sample_graphs(samples: int, seed: int):
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(config.VERIFY_MIN_VERTICES, config.VERIFY_MAX_VERTICES)
        m = rng.randint(0, n * (n - 1) // 2)
        yield random_graph(n, m, rng.randrange(2 ** 31))


@handle_cli_error
def verify(args) -> int:
    if args.graph is None and args.samples < 1:
        raise ValidationError("verify needs --graph or --samples")
    if args.samples < 0:
        raise ValidationError("--samples must be non-negative")

    graphs = []
    if args.graph is not None:
        graphs.append(parse_graph(read_text(args.graph)))
    graphs.extend(sample_graphs(args.samples, args.seed))

    service = ReductionService()
    failures = 0
    for number, graph in enumerate(graphs, start=1):
        record = service.verify_reduction(args.k, graph, args.mode, repair=args.repair)
        if not record.passed:
            failures += 1
            logger.error(f"Instance {number} failed verification")
        print(f"instance={number}")
        print(record.to_text())

    print(f"instances={len(graphs)} failures={failures}")
    return EXIT_YES if failures == 0 else EXIT_NO
