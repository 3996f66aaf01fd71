"""
Independent set oracles for graphs and partitioned instances
"""

import itertools
import logging
import math
from collections import namedtuple
from typing import Dict, FrozenSet, Iterable, Optional

from mastgadget.config import config
from mastgadget.models.graph import Graph, PartitionedInstance
from mastgadget.utils.error_handler import CapExceededError, ValidationError

logger = logging.getLogger(__name__)

IndependentSet = namedtuple('IndependentSet', ['size', 'witness'])


def is_independent(graph: Graph, vertices: Iterable[int]) -> bool:
    """No edge has both endpoints in the set"""
    mask = 0
    for v in vertices:
        if not 1 <= v <= graph.n:
            raise ValidationError(f"vertex {v} is outside 1..{graph.n}")
        mask |= 1 << v
    adjacency = graph.adjacency
    rest = mask
    while rest:
        low = rest & -rest
        if adjacency[low.bit_length() - 1] & mask:
            return False
        rest ^= low
    return True


class GraphService:
    """Exact brute-force oracles with explicit caps"""

    def __init__(self, is_cap: Optional[int] = None, pis_cap: Optional[int] = None):
        self.is_cap = is_cap or config.IS_CAP
        self.pis_cap = pis_cap or config.PIS_CAP

    def max_independent_set(self, graph: Graph) -> IndependentSet:
        """Maximum independent set; ties go to the lexicographically smallest vertex list"""
        if graph.n > self.is_cap:
            raise CapExceededError(
                f"graph has {graph.n} vertices, above the independent set cap {self.is_cap}"
            )
        logger.info(f"Maximum independent set search on n={graph.n}, m={graph.m}")

        adjacency = graph.adjacency
        memo: Dict[int, int] = {0: 0}

        def mis(candidates: int) -> int:
            if candidates in memo:
                return memo[candidates]
            low = candidates & -candidates
            v = low.bit_length() - 1
            neighbours = adjacency[v] & candidates
            without_v = candidates & ~low
            best = 1 + mis(without_v & ~neighbours)
            if neighbours:
                best = max(best, mis(without_v))
            memo[candidates] = best
            return best

        everything = sum(1 << v for v in graph.vertices)
        size = mis(everything)

        chosen = []
        candidates = everything
        need = size
        for v in graph.vertices:
            if need == 0:
                break
            if not candidates >> v & 1:
                continue
            rest = candidates & ~(1 << v) & ~adjacency[v]
            if 1 + mis(rest) >= need:
                chosen.append(v)
                need -= 1
                candidates = rest
            else:
                candidates &= ~(1 << v)

        return IndependentSet(size, frozenset(chosen))

    def solve_pis(self, inst: PartitionedInstance) -> Optional[FrozenSet[int]]:
        """Independent set meeting every part in exactly p vertices, or None"""
        choices = [math.comb(len(part), inst.p) for part in inst.parts]
        total = math.prod(choices)
        if total > self.pis_cap:
            raise CapExceededError(
                f"{total} per-part selections exceed the partitioned search cap {self.pis_cap}"
            )
        if any(count == 0 for count in choices):
            return None
        logger.info(f"PIS_{inst.p} search over k={inst.k} parts, {total} selections")

        adjacency = inst.graph.adjacency
        options = []
        for part in inst.parts:
            part_options = []
            for combo in itertools.combinations(sorted(part), inst.p):
                mask = 0
                reach = 0
                for v in combo:
                    mask |= 1 << v
                    reach |= adjacency[v]
                part_options.append((mask, reach))
            options.append(part_options)

        def search(index: int, chosen: int, reach: int) -> Optional[int]:
            if index == len(options):
                return chosen
            for mask, neighbours in options[index]:
                if mask & reach:
                    continue
                found = search(index + 1, chosen | mask, reach | neighbours)
                if found is not None:
                    return found
            return None

        found = search(0, 0, 0)
        if found is None:
            return None
        return frozenset(v for v in inst.graph.vertices if found >> v & 1)


def max_independent_set(graph: Graph, cap: Optional[int] = None) -> IndependentSet:
    return GraphService(is_cap=cap).max_independent_set(graph)


def solve_pis(inst: PartitionedInstance, cap: Optional[int] = None) -> Optional[FrozenSet[int]]:
    return GraphService(pis_cap=cap).solve_pis(inst)
