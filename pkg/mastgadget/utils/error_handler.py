"""
Error handling utilities
"""

import sys
import logging
import traceback
from functools import wraps

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class MastGadgetError(Exception):
    """Base error carrying the CLI exit code"""
    def __init__(self, message, exit_code=EXIT_USAGE, details=None):
        self.message = message
        self.exit_code = exit_code
        self.details = details
        super().__init__(self.message)


class ValidationError(MastGadgetError):
    """Precondition or invariant violation"""
    def __init__(self, message, details=None):
        super().__init__(message, EXIT_USAGE, details)


class TreeSyntaxError(ValidationError):
    """Malformed tree expression"""
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class FormatError(MastGadgetError):
    """Malformed graph, partition or collection file"""
    def __init__(self, message, details=None):
        super().__init__(message, EXIT_USAGE, details)


class CapExceededError(MastGadgetError):
    """A brute-force oracle refused an instance above its cap"""
    def __init__(self, message, details=None):
        super().__init__(message, EXIT_CAP, details)


def handle_cli_error(func):
    """Decorator turning errors raised by a CLI route into exit codes"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MastGadgetError as e:
            logger.error(f"{type(e).__name__} in {func.__name__}: {e.message}")
            print(f"error: {e.message}", file=sys.stderr)
            if e.details:
                for detail in e.details:
                    print(f"  - {detail}", file=sys.stderr)
            return e.exit_code
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {str(e)}")
            logger.error(traceback.format_exc())
            print(f"error: unexpected error: {e}", file=sys.stderr)
            return EXIT_USAGE

    return wrapper
