"""
Exact MAST / MCT solvers: brute-force subset oracles and 3^p branching
"""

import itertools
import logging
import math
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Optional

from mastgadget.config import config
from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.services.cluster_index import ClusterIndex, index_for
from mastgadget.services.tree_core import restrict
from mastgadget.utils.error_handler import CapExceededError, ValidationError

logger = logging.getLogger(__name__)

Solution = namedtuple('Solution', ['size', 'witness'])

MAST = 'mast'
MCT = 'mct'


def _accepts(index: ClusterIndex, mode: str, mask: int) -> bool:
    if mode == MAST:
        return index.agree_on(mask)
    return index.laminar_union(mask) is not None


def _first_hit(index: ClusterIndex, mode: str, size: int, first: int) -> Optional[int]:
    """First accepted subset of the given size, in lexicographic order, whose smallest element is ``first``"""
    n = len(index.labels)
    head = 1 << first
    if size == 1:
        return head if _accepts(index, mode, head) else None
    for rest in itertools.combinations(range(first + 1, n), size - 1):
        mask = head
        for i in rest:
            mask |= 1 << i
        if _accepts(index, mode, mask):
            return mask
    return None


def _first_hit_job(args):
    return _first_hit(*args)


class SolverService:
    """MAST and MCT solvers with caps and an optional worker pool"""

    def __init__(self,
                 mast_cap: Optional[int] = None,
                 mct_cap: Optional[int] = None,
                 subset_cap: Optional[int] = None,
                 workers: Optional[int] = None):
        self.mast_cap = mast_cap or config.MAST_CAP
        self.mct_cap = mct_cap or config.MCT_CAP
        self.subset_cap = subset_cap or config.SUBSET_CAP
        self.workers = config.worker_count() if workers is None else max(1, workers)

    # -- subset scans ------------------------------------------------------

    def _scan_size(self, index: ClusterIndex, mode: str, size: int) -> Optional[int]:
        n = len(index.labels)
        firsts = range(0, n - size + 1)
        if self.workers > 1 and n >= config.PARALLEL_MIN_LEAVES:
            jobs = [(index, mode, size, first) for first in firsts]
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                for hit in pool.map(_first_hit_job, jobs):
                    if hit is not None:
                        return hit
            return None
        for first in firsts:
            hit = _first_hit(index, mode, size, first)
            if hit is not None:
                return hit
        return None

    def _optimum(self, coll: TreeCollection, mode: str, cap: int) -> Solution:
        if coll.n > cap:
            raise CapExceededError(f"{coll.n} leaves exceed the {mode} brute-force cap {cap}")
        logger.info(f"{mode} brute force over {coll.n} leaves, {coll.k} trees, workers={self.workers}")
        index = index_for(coll)
        for size in range(coll.n, 0, -1):
            mask = self._scan_size(index, mode, size)
            if mask is not None:
                return Solution(size, self._witness(coll, index, mode, mask))
        raise AssertionError("every single leaf is an agreement subtree")

    def _witness(self, coll: TreeCollection, index: ClusterIndex, mode: str, mask: int) -> PhyloTree:
        if mode == MAST:
            return restrict(coll.trees[0], index.labels_of(mask))
        return index.build_tree(index.laminar_union(mask), mask)

    def mast_bruteforce(self, coll: TreeCollection) -> Solution:
        """Largest agreement subtree; ties go to the lexicographically smallest leaf set"""
        return self._optimum(coll, MAST, self.mast_cap)

    def mct_bruteforce(self, coll: TreeCollection) -> Solution:
        """Largest compatible tree; ties go to the lexicographically smallest leaf set"""
        return self._optimum(coll, MCT, self.mct_cap)

    # -- decision versions -------------------------------------------------

    def _decide(self, coll: TreeCollection, mode: str, q: int) -> Optional[PhyloTree]:
        if q < 1:
            raise ValidationError(f"target size q must be positive, got {q}")
        if q > coll.n:
            return None
        subsets = math.comb(coll.n, q)
        if subsets > self.subset_cap:
            raise CapExceededError(
                f"{subsets} leaf subsets of size {q} exceed the subset cap {self.subset_cap}"
            )
        logger.info(f"{mode} decision q={q} over {coll.n} leaves ({subsets} subsets)")
        index = index_for(coll)
        mask = self._scan_size(index, mode, q)
        return None if mask is None else self._witness(coll, index, mode, mask)

    def has_agreement_subtree(self, coll: TreeCollection, q: int) -> Optional[PhyloTree]:
        """Agreement subtree of size exactly q, or None"""
        return self._decide(coll, MAST, q)

    def has_compatible_tree(self, coll: TreeCollection, q: int) -> Optional[PhyloTree]:
        """Compatible tree of size exactly q, or None"""
        return self._decide(coll, MCT, q)

    # -- bounded search ----------------------------------------------------

    def _branch(self, coll: TreeCollection, p: int, mode: str) -> Optional[PhyloTree]:
        if p < 0:
            raise ValidationError(f"deletion budget must be non-negative, got {p}")
        index = index_for(coll)
        find = index.disagreement_triple if mode == MAST else index.conflict_triple
        failed: Dict[int, int] = {}

        def search(mask: int, budget: int) -> Optional[int]:
            # Known to fail with at least this budget
            if failed.get(mask, -1) >= budget:
                return None
            triple = find(mask)
            if triple is None:
                return mask
            # Try deleting each leaf of the triple in turn
            if budget > 0:
                rest = triple
                while rest:
                    low = rest & -rest
                    hit = search(mask & ~low, budget - 1)
                    if hit is not None:
                        return hit
                    rest ^= low
            failed[mask] = max(budget, failed.get(mask, -1))
            return None

        # Start from the full leaf set
        mask = search(index.full, p)
        logger.debug(f"{mode} branching with p={p} visited {len(failed)} failing states")
        if mask is None:
            return None
        return self._witness(coll, index, mode, mask)

    def mast_fpt(self, coll: TreeCollection, p: int) -> Optional[PhyloTree]:
        """Agreement subtree on at least n - p leaves, by branching on disagreement triples"""
        return self._branch(coll, p, MAST)

    def mct_fpt(self, coll: TreeCollection, p: int) -> Optional[PhyloTree]:
        """Compatible tree on at least n - p leaves, by branching on conflicting triples"""
        return self._branch(coll, p, MCT)


def mast_bruteforce(coll: TreeCollection, cap: Optional[int] = None) -> Solution:
    return SolverService(mast_cap=cap).mast_bruteforce(coll)


def mct_bruteforce(coll: TreeCollection, cap: Optional[int] = None) -> Solution:
    return SolverService(mct_cap=cap).mct_bruteforce(coll)


def mast_fpt(coll: TreeCollection, p: int) -> Optional[PhyloTree]:
    return SolverService().mast_fpt(coll, p)


def mct_fpt(coll: TreeCollection, p: int) -> Optional[PhyloTree]:
    return SolverService().mct_fpt(coll, p)
