"""
Line-oriented file formats: graphs, partitions, instances, tree collections
"""

import logging
import os
from typing import Dict, List, Optional, Sequence, Tuple

from mastgadget.models.graph import Graph, PartitionedInstance
from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.services.tree_core import parse_tree, serialize_tree
from mastgadget.utils.error_handler import FormatError, MastGadgetError

logger = logging.getLogger(__name__)


def read_text(path: str) -> str:
    """Read a UTF-8 input file"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}")


def _content_lines(text: str) -> List[str]:
    lines = text.split('\n')
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _ints(line: str, count: Optional[int], where: str) -> List[int]:
    fields = line.split()
    if count is not None and len(fields) != count:
        raise FormatError(f"{where}: expected {count} integers, got {line!r}")
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise FormatError(f"{where}: non-integer field in {line!r}")


# -- graphs ----------------------------------------------------------------

def graph_to_text(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return '\n'.join(lines) + '\n'


def _parse_graph_lines(lines: Sequence[str]) -> Tuple[Graph, int]:
    if not lines:
        raise FormatError("graph file is empty")
    n, m = _ints(lines[0], 2, "graph line 1")
    if n < 0 or m < 0:
        raise FormatError("graph line 1: counts must be non-negative")
    if len(lines) < 1 + m:
        raise FormatError(f"graph declares {m} edges but has {len(lines) - 1} edge lines")
    edges = []
    for number in range(1, m + 1):
        u, v = _ints(lines[number], 2, f"graph line {number + 1}")
        if not 1 <= u < v <= n:
            raise FormatError(f"graph line {number + 1}: need 1 <= u < v <= {n}, got {u} {v}")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise FormatError("graph file lists an edge twice")
    return Graph.from_edges(n, edges), 1 + m


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    graph, used = _parse_graph_lines(lines)
    if used != len(lines):
        raise FormatError(f"graph file has {len(lines) - used} extra lines")
    return graph


# -- partitions and instances ----------------------------------------------

def partition_to_text(parts: Sequence[Sequence[int]], p: int) -> str:
    lines = [f"{len(parts)} {p}"]
    lines.extend(' '.join(str(v) for v in sorted(part)) for part in parts)
    return '\n'.join(lines) + '\n'


def parse_partition(text: str) -> Tuple[List[List[int]], int]:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("partition file is empty")
    k, p = _ints(lines[0], 2, "partition line 1")
    if len(lines) != 1 + k:
        raise FormatError(f"partition declares {k} parts but has {len(lines) - 1} part lines")
    parts = [_ints(line, None, f"partition line {i + 2}") for i, line in enumerate(lines[1:])]
    return parts, p


def instance_to_text(inst: PartitionedInstance) -> str:
    """Graph block followed by partition block"""
    return graph_to_text(inst.graph) + partition_to_text(inst.parts, inst.p)


def parse_instance(text: str) -> PartitionedInstance:
    lines = _content_lines(text)
    graph, used = _parse_graph_lines(lines)
    parts, p = parse_partition('\n'.join(lines[used:]))
    try:
        return PartitionedInstance(graph, tuple(frozenset(part) for part in parts), p)
    except MastGadgetError as e:
        raise FormatError(f"instance file: {e.message}", details=e.details)


# -- tree collections ------------------------------------------------------

def collection_to_text(coll: TreeCollection, header: Optional[Dict[str, int]] = None) -> str:
    lines = []
    if header:
        lines.append(' '.join(f"{key} {value}" for key, value in header.items()))
    lines.extend(serialize_tree(tree) for tree in coll.trees)
    return '\n'.join(lines) + '\n'


def parse_collection(text: str) -> Tuple[Dict[str, int], TreeCollection]:
    """Optional 'key value ...' header line, then one tree expression per line"""
    lines = [line for line in _content_lines(text) if line.strip()]
    header: Dict[str, int] = {}
    if lines and not lines[0].rstrip().endswith(';'):
        fields = lines[0].split()
        if len(fields) % 2:
            raise FormatError(f"collection header must be key/value pairs, got {lines[0]!r}")
        for key, value in zip(fields[::2], fields[1::2]):
            try:
                header[key] = int(value)
            except ValueError:
                raise FormatError(f"collection header value for {key} is not an integer")
        lines = lines[1:]
    if not lines:
        raise FormatError("collection file holds no trees")
    trees = []
    for number, line in enumerate(lines, start=1):
        try:
            trees.append(parse_tree(line))
        except MastGadgetError as e:
            raise FormatError(f"tree {number}: {e.message}")
    try:
        return header, TreeCollection(tuple(trees))
    except MastGadgetError as e:
        raise FormatError(f"collection: {e.message}", details=e.details)


def load_tree(argument: str) -> PhyloTree:
    """Tree from a file path, or from an inline expression"""
    if os.path.isfile(argument):
        return parse_tree(read_text(argument).strip())
    return parse_tree(argument)
