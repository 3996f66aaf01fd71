#!/usr/bin/env python3
"""
mastgadget command-line application
"""

import argparse
import logging
import sys
from typing import List, Optional

from mastgadget.config import config
from mastgadget.routes import register_routes
from mastgadget.utils.error_handler import EXIT_USAGE

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser with every subcommand registered"""
    parser = argparse.ArgumentParser(
        prog='mastgadget',
        description='Agreement and compatible subtrees, their solvers, and gadget reductions'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    register_routes(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit status"""
    logging.basicConfig(
        level=config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr
    )

    try:
        config.validate()
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logger.debug(f"Running {args.command}")
    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())
