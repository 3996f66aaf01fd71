"""
Tree kernel: parsing, serialization, restriction, refinement and the
named tree constructions (caterpillars, minimum-height trees, substitution)
"""

import itertools
import logging
from collections import namedtuple
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from mastgadget.config import config
from mastgadget.models.tree import PhyloTree
from mastgadget.utils.error_handler import TreeSyntaxError, ValidationError
from mastgadget.utils.validators import LABEL_PATTERN, validate_labels

logger = logging.getLogger(__name__)

TreeStats = namedtuple('TreeStats', ['size', 'max_degree', 'height'])

_LABEL_CHARS = frozenset('ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_')
_WHITESPACE = frozenset(' \t\r\n')


def parse_tree(text: str) -> PhyloTree:
    """Parse ``subtree ';'`` where subtree := LABEL | '(' subtree (',' subtree)+ ')'"""
    i = 0
    length = len(text)
    stack: List[Tuple[int, List[PhyloTree]]] = []
    seen: Set[str] = set()
    result: Optional[PhyloTree] = None
    expect_subtree = True

    def skip(pos):
        while pos < length and text[pos] in _WHITESPACE:
            pos += 1
        return pos

    i = skip(i)
    if i == length:
        raise TreeSyntaxError("empty tree expression", i)

    while True:
        i = skip(i)
        if i == length:
            raise TreeSyntaxError("unexpected end of input, expected ';'", i)
        ch = text[i]

        if expect_subtree:
            if ch == '(':
                stack.append((i, []))
                i += 1
                continue
            if ch in _LABEL_CHARS:
                start = i
                while i < length and text[i] in _LABEL_CHARS:
                    i += 1
                label = text[start:i]
                if label in seen:
                    raise ValidationError(f"duplicate leaf label {label} at position {start}")
                seen.add(label)
                node = PhyloTree.leaf(label)
            else:
                raise TreeSyntaxError(f"expected '(' or a label, found {ch!r}", i)
        else:
            if ch == ',' and stack:
                expect_subtree = True
                i += 1
                continue
            if ch == ')' and stack:
                start, children = stack.pop()
                if len(children) < 2:
                    raise ValidationError(
                        f"internal node of degree {len(children)} opened at position {start}"
                    )
                node = PhyloTree.node(children)
                i += 1
            elif ch == ';' and not stack:
                if skip(i + 1) != length:
                    raise TreeSyntaxError("trailing characters after ';'", skip(i + 1))
                return result
            else:
                raise TreeSyntaxError(f"unexpected {ch!r}", i)

        if stack:
            stack[-1][1].append(node)
        else:
            result = node
        expect_subtree = False


def serialize_tree(tree: PhyloTree) -> str:
    """Canonical expression, children ordered by smallest descendant label"""
    return tree.to_text() + ';'


def tree_equal(tree: PhyloTree, other: PhyloTree) -> bool:
    return serialize_tree(tree) == serialize_tree(other)


def restrict(tree: PhyloTree, labels: Iterable[str]) -> Optional[PhyloTree]:
    """Topological restriction to a leaf subset; None stands for the empty tree"""
    wanted = frozenset(labels)
    if not wanted <= tree.leaves:
        raise ValidationError(f"labels not in tree: {sorted(wanted - tree.leaves)}")
    return _restrict(tree, wanted)


def _restrict(tree: PhyloTree, wanted: FrozenSet[str]) -> Optional[PhyloTree]:
    if not wanted:
        return None
    # Post-order over the nodes that straddle the wanted set
    restricted = {}
    stack = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if not expanded:
            if wanted.isdisjoint(node.leaves):
                restricted[id(node)] = None
            elif node.leaves <= wanted:
                restricted[id(node)] = node
            else:
                stack.append((node, True))
                stack.extend((child, False) for child in node.children)
            continue
        kept = [restricted.pop(id(child)) for child in node.children]
        kept = [child for child in kept if child is not None]
        # Suppress the node when only one child survives
        restricted[id(node)] = kept[0] if len(kept) == 1 else PhyloTree.node(kept)
    return restricted[id(tree)]


def clusters(tree: PhyloTree) -> Set[FrozenSet[str]]:
    """Leaf sets below every node"""
    return {node.leaves for node in tree.subtrees()}


def refines(tree: PhyloTree, other: PhyloTree) -> bool:
    """True iff ``other`` arises from ``tree`` by collapsing internal edges"""
    if tree.leaves != other.leaves:
        raise ValidationError("refinement needs identical leaf sets")
    return clusters(other) <= clusters(tree)


def tree_stats(tree: PhyloTree) -> TreeStats:
    max_degree = 0
    height = 0
    stack = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        max_degree = max(max_degree, node.degree)
        height = max(height, depth)
        stack.extend((child, depth + 1) for child in node.children)
    return TreeStats(tree.size, max_degree, height)


def substitute(tree: PhyloTree, parts: Sequence[PhyloTree]) -> PhyloTree:
    """T[T_1, ..., T_n]: replace leaf i of a tree on 1..n by parts[i - 1]"""
    expected = frozenset(str(i) for i in range(1, len(parts) + 1))
    if tree.leaves != expected:
        raise ValidationError(
            f"substitution needs a tree on 1..{len(parts)}, got leaves {sorted(tree.leaves)}"
        )
    seen: Set[str] = set()
    for part in parts:
        if seen & part.leaves:
            raise ValidationError(f"substituted parts overlap on {sorted(seen & part.leaves)}")
        seen |= part.leaves

    def graft(node: PhyloTree) -> PhyloTree:
        if node.is_leaf:
            return parts[int(node.label) - 1]
        return PhyloTree.node(graft(child) for child in node.children)

    return graft(tree)


def caterpillar(labels: Sequence[str]) -> PhyloTree:
    """R_n[l_1, ..., l_n] = <R_{n-1}[l_1, ..., l_{n-1}], l_n>"""
    errors = validate_labels(labels)
    if errors:
        raise ValidationError("Invalid caterpillar labels", details=errors)
    tree = PhyloTree.leaf(labels[0])
    for label in labels[1:]:
        tree = PhyloTree.node((tree, PhyloTree.leaf(label)))
    return tree


def min_height_binary(labels: Sequence[str]) -> PhyloTree:
    """Binary tree of height ceil(log2 k); the left half takes the first ceil(k/2) labels"""
    errors = validate_labels(labels)
    if errors:
        raise ValidationError("Invalid labels for minimum-height tree", details=errors)

    def build(chunk: Sequence[str]) -> PhyloTree:
        if len(chunk) == 1:
            return PhyloTree.leaf(chunk[0])
        half = (len(chunk) + 1) // 2
        return PhyloTree.node((build(chunk[:half]), build(chunk[half:])))

    return build(list(labels))


def balanced_tree(k: int) -> PhyloTree:
    """Canonical H_k on labels 1..k"""
    return min_height_binary([str(i) for i in range(1, k + 1)])


def collapse_leaf_path(tree: PhyloTree, i: str, j: str) -> Tuple[PhyloTree, PhyloTree]:
    """Collapse every internal edge on the path between leaves i and j.

    Returns the collapsed tree and the merged node (the former lowest common
    ancestor of i and j), as it appears in the collapsed tree.
    """
    for label in (i, j):
        if label not in tree.leaves:
            raise ValidationError(f"{label} is not a leaf of the tree")
    if i == j:
        raise ValidationError("collapse_leaf_path needs two distinct leaves")
    pair = frozenset((i, j))

    lca = tree
    while True:
        below = [child for child in lca.children if pair <= child.leaves]
        if not below:
            break
        lca = below[0]

    def rebuild(node: PhyloTree) -> List[PhyloTree]:
        if node.is_leaf or not (node.leaves & pair):
            return [node]
        kids = [x for child in node.children for x in rebuild(child)]
        if len(node.leaves & pair) == 1:
            return kids
        return [PhyloTree.node(kids)]

    collapsed = rebuild(tree)[0]
    merged = next(node for node in collapsed.subtrees() if node.leaves == lca.leaves)
    return collapsed, merged


def collapse_path_above(tree: PhyloTree, label: str, count: int) -> PhyloTree:
    """Collapse ``count`` consecutive internal edges going up from the parent of a leaf"""
    path = []
    node = tree
    while not node.is_leaf:
        path.append(node)
        node = next(child for child in node.children if label in child.leaves)
    if node.label != label:
        raise ValidationError(f"{label} is not a leaf of the tree")
    # path runs from the root to the leaf's parent
    if count > len(path) - 1:
        raise ValidationError(
            f"only {len(path) - 1} internal edges above {label}, cannot collapse {count}"
        )
    if count == 0:
        return tree
    dissolved = {id(n) for n in path[len(path) - count:]}

    def rebuild(node: PhyloTree) -> List[PhyloTree]:
        if node.is_leaf or label not in node.leaves:
            return [node]
        kids = [x for child in node.children for x in rebuild(child)]
        if id(node) in dissolved:
            return kids
        return [PhyloTree.node(kids)]

    return rebuild(tree)[0]


def contractions(tree: PhyloTree) -> List[PhyloTree]:
    """Every tree obtained by collapsing a subset of internal edges (exhaustive)"""
    internal = [node for node in tree.subtrees() if not node.is_leaf and node is not tree]
    results = {}
    for r in range(len(internal) + 1):
        for chosen in itertools.combinations(internal, r):
            collapsed_ids = {id(n) for n in chosen}

            def rebuild(node: PhyloTree) -> List[PhyloTree]:
                if node.is_leaf:
                    return [node]
                kids = [x for child in node.children for x in rebuild(child)]
                if id(node) in collapsed_ids:
                    return kids
                return [PhyloTree.node(kids)]

            result = rebuild(tree)[0]
            results[serialize_tree(result)] = result
    return [results[key] for key in sorted(results)]


def _set_partitions(items: Sequence[str]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for index in range(len(partition)):
            yield partition[:index] + [[first] + partition[index]] + partition[index + 1:]


@lru_cache(maxsize=None)
def _trees_on(labels: FrozenSet[str]) -> Tuple[PhyloTree, ...]:
    if len(labels) == 1:
        return (PhyloTree.leaf(next(iter(labels))),)
    found = []
    for partition in _set_partitions(sorted(labels)):
        if len(partition) < 2:
            continue
        options = [_trees_on(frozenset(block)) for block in partition]
        for choice in itertools.product(*options):
            found.append(PhyloTree.node(choice))
    return tuple(found)


def enumerate_trees(labels: Iterable[str], limit: Optional[int] = None) -> List[PhyloTree]:
    """All rooted unordered trees on exactly ``labels``, sorted by canonical text"""
    labels = frozenset(labels)
    limit = config.ENUM_LIMIT if limit is None else limit
    if len(labels) > limit:
        raise ValidationError(f"refusing to enumerate trees on {len(labels)} labels (limit {limit})")
    bad = [label for label in labels if not LABEL_PATTERN.match(label)]
    if bad:
        raise ValidationError(f"invalid leaf labels: {sorted(bad)}")
    if not labels:
        return []
    return sorted(_trees_on(labels), key=serialize_tree)
