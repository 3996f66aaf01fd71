"""
Tree predicate commands
"""

import logging

from mastgadget.services.agreement import is_agreement_subtree, is_compatible_with
from mastgadget.services.formats import load_tree, parse_collection, read_text
from mastgadget.services.tree_core import refines, restrict, serialize_tree, tree_equal
from mastgadget.utils.error_handler import EXIT_NO, EXIT_YES, ValidationError, handle_cli_error

logger = logging.getLogger(__name__)

PREDICATES = ('restrict', 'equal', 'refines', 'agreement', 'compatible')


def register(subparsers):
    parser = subparsers.add_parser('check', help='tree predicates')
    parser.add_argument('predicate', choices=PREDICATES)
    parser.add_argument('--tree', required=True, help='tree expression or file')
    parser.add_argument('--other', help='second tree (equal, refines)')
    parser.add_argument('--leaves', help='comma-separated leaf labels (restrict)')
    parser.add_argument('--input', help='tree collection file (agreement, compatible)')
    parser.set_defaults(handler=check)


def _answer(flag: bool) -> int:
    print('yes' if flag else 'no')
    return EXIT_YES if flag else EXIT_NO


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise ValidationError(f"check {args.predicate} needs --{name}")
    return value


@handle_cli_error
def check(args) -> int:
    tree = load_tree(args.tree)

    if args.predicate == 'restrict':
        leaves = [label for label in _require(args, 'leaves').split(',') if label]
        result = restrict(tree, leaves)
        print('empty' if result is None else serialize_tree(result))
        return EXIT_YES

    if args.predicate in ('equal', 'refines'):
        other = load_tree(_require(args, 'other'))
        if args.predicate == 'equal':
            return _answer(tree_equal(tree, other))
        return _answer(refines(tree, other))

    _, coll = parse_collection(read_text(_require(args, 'input')))
    if args.predicate == 'agreement':
        return _answer(is_agreement_subtree(tree, coll))
    return _answer(is_compatible_with(tree, coll))
