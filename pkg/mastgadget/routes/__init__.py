"""
Command-line routes
"""

from . import check_routes, solve_routes, reduce_routes, verify_routes, gen_routes

__all__ = [
    'check_routes',
    'solve_routes',
    'reduce_routes',
    'verify_routes',
    'gen_routes'
]


def register_routes(subparsers):
    """Register every subcommand group with the parser"""
    check_routes.register(subparsers)
    solve_routes.register(subparsers)
    reduce_routes.register(subparsers)
    verify_routes.register(subparsers)
    gen_routes.register(subparsers)
