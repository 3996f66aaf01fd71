"""
Graph and partitioned independent set models
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from mastgadget.utils.error_handler import ValidationError
from mastgadget.utils.validators import validate_graph, validate_partition


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n"""
    n: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        edges = list(self.edges)
        errors = validate_graph(self.n, edges)
        if errors:
            raise ValidationError("Invalid graph", details=errors)
        object.__setattr__(self, 'edges', frozenset((min(u, v), max(u, v)) for u, v in edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """Neighbourhood bitmask per vertex; bit v stands for vertex v, index 0 unused"""
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class PartitionedInstance:
    """A PIS_p instance: graph, k equal-size independent parts, multiplicity p.

    ``origin`` optionally maps each vertex to the (source vertex, part index)
    it was built from, or to None for padding vertices.
    """
    graph: Graph
    parts: Tuple[FrozenSet[int], ...]
    p: int
    origin: Optional[Dict[int, Optional[Tuple[int, int]]]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        parts = tuple(frozenset(part) for part in self.parts)
        errors = validate_partition(self.graph.n, self.graph.edges, parts, self.p)
        if errors:
            raise ValidationError("Invalid partitioned instance", details=errors)
        object.__setattr__(self, 'parts', parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def part_size(self) -> int:
        return len(self.parts[0])

    @cached_property
    def part_index(self) -> Dict[int, int]:
        """Vertex -> 1-based index of its part"""
        return {v: i for i, part in enumerate(self.parts, start=1) for v in part}
