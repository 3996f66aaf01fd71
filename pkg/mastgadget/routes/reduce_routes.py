"""
Reduction commands
"""

import logging

from mastgadget.services.formats import (
    collection_to_text,
    instance_to_text,
    parse_graph,
    parse_instance,
    read_text,
)
from mastgadget.services.reductions import is_to_pis1, pis1_to_ast, pis2_to_ct, pis_pad
from mastgadget.utils.error_handler import EXIT_YES, FormatError, ValidationError, handle_cli_error

logger = logging.getLogger(__name__)

STEPS = ('is-pis1', 'pis-pad', 'pis1-ast', 'pis2-ct')


def register(subparsers):
    parser = subparsers.add_parser('reduce', help='build reduction instances')
    parser.add_argument('step', choices=STEPS)
    parser.add_argument('--k', type=int, help='number of parts (is-pis1)')
    parser.add_argument('--graph', help='graph file (is-pis1)')
    parser.add_argument('--input', help='partitioned instance file')
    parser.add_argument('--times', type=int, default=1, help='padding rounds (pis-pad)')
    parser.add_argument('--repair', action='store_true', help='add the degree-repair tree (pis2-ct)')
    parser.add_argument('--report', help='write the reduction report to this file')
    parser.set_defaults(handler=reduce)


def _write_report(path, report):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(report.to_text())
    except OSError as e:
        raise FormatError(f"cannot write report {path}: {e.strerror}")
    logger.info(f"Report written to {path}")


@handle_cli_error
def reduce(args) -> int:
    if args.step == 'is-pis1':
        if args.k is None or args.graph is None:
            raise ValidationError("reduce is-pis1 needs --k and --graph")
        inst = is_to_pis1(args.k, parse_graph(read_text(args.graph)))
        print(instance_to_text(inst), end='')
        return EXIT_YES

    if args.input is None:
        raise ValidationError(f"reduce {args.step} needs --input")
    inst = parse_instance(read_text(args.input))

    if args.step == 'pis-pad':
        if args.times < 1:
            raise ValidationError("--times must be positive")
        for _ in range(args.times):
            inst = pis_pad(inst)
        print(instance_to_text(inst), end='')
        return EXIT_YES

    if args.step == 'pis1-ast':
        q, coll, report = pis1_to_ast(inst)
    else:
        q, coll, report = pis2_to_ct(inst, repair=args.repair)

    print(collection_to_text(coll, {'q': q, 'k': report.k, 'D': report.D}), end='')
    if args.report:
        _write_report(args.report, report)
    return EXIT_YES
