"""
Utility functions and helpers
"""

from .validators import (
    validate_labels,
    validate_graph,
    validate_partition,
    validate_pis1_to_ast,
    validate_pis2_to_ct
)

from .error_handler import (
    handle_cli_error,
    MastGadgetError,
    ValidationError,
    TreeSyntaxError,
    FormatError,
    CapExceededError
)

from .helpers import (
    instance_digest,
    ceil_log2,
    format_key_values,
    parse_key_values
)

__all__ = [
    'validate_labels',
    'validate_graph',
    'validate_partition',
    'validate_pis1_to_ast',
    'validate_pis2_to_ct',
    'handle_cli_error',
    'MastGadgetError',
    'ValidationError',
    'TreeSyntaxError',
    'FormatError',
    'CapExceededError',
    'instance_digest',
    'ceil_log2',
    'format_key_values',
    'parse_key_values'
]
