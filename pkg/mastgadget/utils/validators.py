"""
Input validation utilities
"""

import re
from typing import Iterable, List, Optional, Sequence, Set, Tuple

LABEL_PATTERN = re.compile(r'^[A-Za-z0-9_]+$')


def validate_labels(labels: Sequence[str]) -> Optional[List[str]]:
    """Validate an ordered list of leaf labels"""
    errors = []

    if not labels:
        errors.append("label list must be nonempty")

    seen = set()
    for label in labels:
        if not isinstance(label, str) or not LABEL_PATTERN.match(label):
            errors.append(f"invalid leaf label: {label!r}")
        elif label in seen:
            errors.append(f"duplicate leaf label: {label}")
        seen.add(label)

    return errors if errors else None


def validate_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Optional[List[str]]:
    """Validate vertex count and edge list of a simple graph on 1..n"""
    errors = []

    if not isinstance(n, int) or n < 0:
        errors.append(f"vertex count must be a non-negative integer, got {n!r}")
        return errors

    seen = set()
    for u, v in edges:
        if u == v:
            errors.append(f"self-loop on vertex {u}")
        elif not (1 <= u <= n and 1 <= v <= n):
            errors.append(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        else:
            key = (min(u, v), max(u, v))
            if key in seen:
                errors.append(f"duplicate edge {key}")
            seen.add(key)

    return errors if errors else None


def validate_partition(n: int,
                       edges: Set[Tuple[int, int]],
                       parts: Sequence[Iterable[int]],
                       p: int) -> Optional[List[str]]:
    """Validate a PIS_p instance: disjoint equal-size independent parts covering 1..n"""
    errors = []

    if not isinstance(p, int) or p < 1:
        errors.append(f"multiplicity p must be a positive integer, got {p!r}")

    if not parts:
        errors.append("at least one part is required")
        return errors

    covered = set()
    sizes = set()
    for index, part in enumerate(parts, start=1):
        part = set(part)
        sizes.add(len(part))
        overlap = covered & part
        if overlap:
            errors.append(f"part {index} overlaps earlier parts on {sorted(overlap)}")
        covered |= part
        for u, v in edges:
            if u in part and v in part:
                errors.append(f"part {index} is not independent: edge ({u}, {v})")
                break

    if covered != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - covered)
        extra = sorted(covered - set(range(1, n + 1)))
        if missing:
            errors.append(f"vertices not covered by any part: {missing}")
        if extra:
            errors.append(f"parts mention unknown vertices: {extra}")

    if len(sizes) > 1:
        errors.append(f"parts must have equal cardinality, got sizes {sorted(sizes)}")

    return errors if errors else None


def validate_pis1_to_ast(k: int, part_sizes: Sequence[int], p: int) -> Optional[List[str]]:
    """Preconditions of the agreement-subtree gadget"""
    errors = []
    if p != 1:
        errors.append(f"instance must have p = 1, got p = {p}")
    if k < 3:
        errors.append(f"need at least three parts, got k = {k}")
    if any(size < 3 for size in part_sizes):
        errors.append(f"every part needs at least three vertices, got sizes {sorted(set(part_sizes))}")
    return errors if errors else None


def validate_pis2_to_ct(k: int, part_size: int, p: int, repair: bool,
                        repair_min: int) -> Optional[List[str]]:
    """Preconditions of the compatible-tree gadget"""
    errors = []
    if p != 2:
        errors.append(f"instance must have p = 2, got p = {p}")
    if k < 2:
        errors.append(f"need at least two parts, got k = {k}")
    if part_size < 2:
        errors.append(f"every part needs at least two vertices, got {part_size}")
    if repair and part_size < repair_min:
        errors.append(f"repair needs parts of size >= {repair_min}, got {part_size}")
    return errors if errors else None
