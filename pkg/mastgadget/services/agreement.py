"""
Agreement and compatibility predicates over tree collections
"""

import logging
from typing import FrozenSet, Iterable, Optional, Tuple

from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.services.cluster_index import index_for
from mastgadget.utils.error_handler import ValidationError

logger = logging.getLogger(__name__)


def _check_subset(labels: FrozenSet[str], coll: TreeCollection):
    if not labels <= coll.leaves:
        raise ValidationError(
            f"leaves outside the common leaf set: {sorted(labels - coll.leaves)}"
        )


def is_agreement_subtree(tree: PhyloTree, coll: TreeCollection) -> bool:
    """T equals the restriction of every member to L(T)"""
    _check_subset(tree.leaves, coll)
    index = index_for(coll)
    return index.agrees_with(index.tree_masks(tree), index.mask_of(tree.leaves))


def is_compatible_with(tree: PhyloTree, coll: TreeCollection) -> bool:
    """T refines the restriction of every member to L(T)"""
    _check_subset(tree.leaves, coll)
    index = index_for(coll)
    return index.compatible_with(index.tree_masks(tree), index.mask_of(tree.leaves))


def compatible_exists(coll: TreeCollection, labels: Iterable[str]) -> Tuple[bool, Optional[PhyloTree]]:
    """Is there a tree on X refining every restriction? Returns the canonical witness.

    A common refinement exists iff the union of the restrictions' clusters is
    laminar; that family is then the cluster set of the least resolved witness.
    """
    labels = frozenset(labels)
    if not labels:
        raise ValidationError("compatible_exists needs a nonempty leaf set")
    _check_subset(labels, coll)
    index = index_for(coll)
    mask = index.mask_of(labels)
    family = index.laminar_union(mask)
    if family is None:
        return False, None
    return True, index.build_tree(family, mask)


def find_disagreement_triple(coll: TreeCollection, labels: Iterable[str]) -> Optional[FrozenSet[str]]:
    """Some {a, b, c} of X on which two members' restrictions differ, scanned lexicographically"""
    labels = frozenset(labels)
    _check_subset(labels, coll)
    index = index_for(coll)
    triple = index.disagreement_triple(index.mask_of(labels))
    return None if triple is None else frozenset(index.labels_of(triple))


def find_conflict_triple(coll: TreeCollection, labels: Iterable[str]) -> Optional[FrozenSet[str]]:
    """Some {a, b, c} of X resolved differently by two members (two distinct binary triples)"""
    labels = frozenset(labels)
    _check_subset(labels, coll)
    index = index_for(coll)
    triple = index.conflict_triple(index.mask_of(labels))
    return None if triple is None else frozenset(index.labels_of(triple))
