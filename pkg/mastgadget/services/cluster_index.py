"""
Bitmask cluster index over the common leaf set of a tree collection.

The clusters of restrict(T, X) are exactly the nonempty sets c & X for the
clusters c of T, so agreement, compatibility and triple topologies on any
leaf subset X can be read off the stored masks without rebuilding trees.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.utils.error_handler import ValidationError

logger = logging.getLogger(__name__)


class ClusterIndex:
    """Internal-node clusters of every member, as bitmasks over sorted labels"""

    def __init__(self, labels: Tuple[str, ...], tree_clusters: List[Tuple[int, ...]]):
        self.labels = labels
        self.bit: Dict[str, int] = {label: 1 << i for i, label in enumerate(labels)}
        self.tree_clusters = tree_clusters
        self.full = (1 << len(labels)) - 1

    @classmethod
    def from_collection(cls, coll: TreeCollection) -> 'ClusterIndex':
        labels = coll.labels
        bit = {label: 1 << i for i, label in enumerate(labels)}
        tree_clusters = []
        for tree in coll.trees:
            masks = set()
            for node in tree.subtrees():
                if not node.is_leaf:
                    mask = 0
                    for label in node.leaves:
                        mask |= bit[label]
                    masks.add(mask)
            tree_clusters.append(tuple(sorted(masks)))
        return cls(labels, tree_clusters)

    # -- conversions -------------------------------------------------------

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            if label not in self.bit:
                raise ValidationError(f"label {label} is not in the common leaf set")
            mask |= self.bit[label]
        return mask

    def labels_of(self, mask: int) -> List[str]:
        return [label for i, label in enumerate(self.labels) if mask >> i & 1]

    def tree_masks(self, tree: PhyloTree) -> Set[int]:
        """Internal clusters of a tree whose leaves lie in the common set"""
        return {self.mask_of(node.leaves) for node in tree.subtrees() if not node.is_leaf}

    # -- restricted views --------------------------------------------------

    def restricted(self, member: int, mask: int) -> FrozenSet[int]:
        """Non-singleton clusters of member restricted to mask"""
        out = set()
        for cluster in self.tree_clusters[member]:
            inter = cluster & mask
            if inter & (inter - 1):
                out.add(inter)
        return frozenset(out)

    def agree_on(self, mask: int) -> bool:
        base = self.restricted(0, mask)
        return all(self.restricted(t, mask) == base for t in range(1, len(self.tree_clusters)))

    def laminar_union(self, mask: int) -> Optional[Set[int]]:
        """Union of restricted clusters if laminar, else None"""
        family: Set[int] = set()
        for t in range(len(self.tree_clusters)):
            for cluster in self.restricted(t, mask):
                if cluster in family:
                    continue
                for other in family:
                    inter = cluster & other
                    if inter and inter != cluster and inter != other:
                        return None
                family.add(cluster)
        return family

    def compatible_with(self, masks: Set[int], mask: int) -> bool:
        """Every member's restriction to mask is a coarsening of the given clusters"""
        return all(self.restricted(t, mask) <= masks for t in range(len(self.tree_clusters)))

    def agrees_with(self, masks: Set[int], mask: int) -> bool:
        return all(self.restricted(t, mask) == masks for t in range(len(self.tree_clusters)))

    # -- triples -----------------------------------------------------------

    def topology(self, member: int, triple: int) -> int:
        """Mask of the resolved pair of a 3-leaf restriction, 0 for the star"""
        for cluster in self.tree_clusters[member]:
            inter = cluster & triple
            if inter != triple and inter & (inter - 1):
                return inter
        return 0

    def _triples(self, mask: int):
        bits = [1 << i for i in range(len(self.labels)) if mask >> i & 1]
        for a, b, c in itertools.combinations(bits, 3):
            yield a | b | c

    def disagreement_triple(self, mask: int) -> Optional[int]:
        if self.agree_on(mask):
            return None
        for triple in self._triples(mask):
            first = self.topology(0, triple)
            if any(self.topology(t, triple) != first for t in range(1, len(self.tree_clusters))):
                return triple
        raise AssertionError("restrictions differ but no 3-leaf disagreement was found")

    def conflict_triple(self, mask: int) -> Optional[int]:
        if self.laminar_union(mask) is not None:
            return None
        for triple in self._triples(mask):
            resolved = {self.topology(t, triple) for t in range(len(self.tree_clusters))}
            resolved.discard(0)
            if len(resolved) > 1:
                return triple
        raise AssertionError("cluster union is not laminar but no conflicting triple was found")

    # -- witnesses ---------------------------------------------------------

    def build_tree(self, family: Iterable[int], mask: int) -> PhyloTree:
        """Tree on mask whose internal clusters are the given laminar family"""
        # Nontrivial clusters inside mask, largest first
        members = sorted({c for c in family if c != mask and c & mask == c and c & (c - 1)},
                         key=lambda c: -bin(c).count('1'))

        def build(current: int, inside: List[int]) -> PhyloTree:
            # Single leaf
            if not current & (current - 1):
                return PhyloTree.leaf(self.labels[current.bit_length() - 1])
            # Maximal clusters become the children
            maximal = []
            for c in inside:
                if not any(c & m == c for m in maximal):
                    maximal.append(c)
            covered = 0
            children = []
            for m in maximal:
                covered |= m
                children.append(build(m, [c for c in inside if c != m and c & m == c]))
            # Uncovered leaves hang directly below
            rest = current & ~covered
            while rest:
                low = rest & -rest
                children.append(PhyloTree.leaf(self.labels[low.bit_length() - 1]))
                rest ^= low
            return PhyloTree.node(children)

        return build(mask, members)


@lru_cache(maxsize=64)
def index_for(coll: TreeCollection) -> ClusterIndex:
    return ClusterIndex.from_collection(coll)
