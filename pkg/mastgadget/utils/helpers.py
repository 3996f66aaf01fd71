"""
Helper utility functions
"""

import hashlib
from typing import Dict, Iterable, Any


def instance_digest(text: str) -> str:
    """
    MD5 digest of a canonical text rendering
    """
    hash_md5 = hashlib.md5()
    hash_md5.update(text.encode('utf-8'))
    return hash_md5.hexdigest()


def ceil_log2(k: int) -> int:
    """Smallest h with 2**h >= k"""
    if k < 1:
        raise ValueError(f"ceil_log2 needs k >= 1, got {k}")
    return (k - 1).bit_length()


def format_key_values(fields: Dict[str, Any]) -> str:
    """
    Render a flat key=value block, one pair per line, in insertion order
    """
    lines = []
    for key, value in fields.items():
        if isinstance(value, bool):
            value = 'yes' if value else 'no'
        elif value is None:
            value = '-'
        elif isinstance(value, (list, tuple, set, frozenset)):
            value = ' '.join(str(v) for v in value) or '-'
        lines.append(f"{key}={value}")
    return '\n'.join(lines) + '\n'


def parse_key_values(text: str) -> Dict[str, str]:
    """Inverse of format_key_values for flat string values"""
    fields = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        key, _, value = line.partition('=')
        fields[key] = value
    return fields


def format_vertices(vertices: Iterable[int]) -> str:
    return ' '.join(str(v) for v in sorted(vertices))
