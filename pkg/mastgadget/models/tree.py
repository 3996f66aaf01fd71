"""
Rooted leaf-labeled tree models
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Tuple

from mastgadget.utils.error_handler import ValidationError
from mastgadget.utils.validators import LABEL_PATTERN


@dataclass(frozen=True, eq=False, repr=False)
class PhyloTree:
    """Rooted unordered tree whose leaves carry distinct labels.

    A node is a leaf when ``label`` is set, otherwise an internal node with at
    least two children. Children are kept sorted by their smallest descendant
    label, so two trees are equal as unordered trees iff they compare equal.
    """
    label: Optional[str] = None
    children: Tuple['PhyloTree', ...] = ()

    def __post_init__(self):
        if self.label is not None:
            if self.children:
                raise ValidationError(f"leaf {self.label} cannot have children")
            if not LABEL_PATTERN.match(self.label):
                raise ValidationError(f"invalid leaf label: {self.label!r}")
            return

        children = tuple(self.children)
        if len(children) < 2:
            raise ValidationError(
                f"internal node must have at least two children, got {len(children)}"
            )
        total = sum(child.size for child in children)
        if len(frozenset().union(*(child.leaves for child in children))) != total:
            raise ValidationError("duplicate leaf label among siblings' subtrees")
        object.__setattr__(self, 'children', tuple(sorted(children, key=lambda c: c.min_label)))

    @classmethod
    def leaf(cls, label: str) -> 'PhyloTree':
        return cls(label=label)

    @classmethod
    def node(cls, children: Iterable['PhyloTree']) -> 'PhyloTree':
        return cls(children=tuple(children))

    @property
    def is_leaf(self) -> bool:
        return self.label is not None

    @property
    def degree(self) -> int:
        return len(self.children)

    @cached_property
    def leaves(self) -> FrozenSet[str]:
        if self.is_leaf:
            return frozenset((self.label,))
        return frozenset().union(*(child.leaves for child in self.children))

    @cached_property
    def size(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.size for child in self.children)

    @cached_property
    def min_label(self) -> str:
        if self.is_leaf:
            return self.label
        return self.children[0].min_label

    def subtrees(self):
        """Pre-order iteration over all nodes"""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    @cached_property
    def canonical(self) -> str:
        """Canonical expression without the trailing ';'; equality and hashing use it"""
        parts = []
        stack = [self]
        while stack:
            item = stack.pop()
            if isinstance(item, str):
                parts.append(item)
            elif item.is_leaf:
                parts.append(item.label)
            else:
                parts.append('(')
                stack.append(')')
                for index, child in enumerate(reversed(item.children)):
                    if index:
                        stack.append(',')
                    stack.append(child)
        return ''.join(parts)

    def to_text(self) -> str:
        return self.canonical

    def __eq__(self, other):
        if not isinstance(other, PhyloTree):
            return NotImplemented
        return self is other or self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"PhyloTree({self.canonical!r})"

    def __str__(self):
        return self.canonical + ';'


@dataclass(frozen=True)
class TreeCollection:
    """Ordered collection of trees over one common leaf set"""
    trees: Tuple[PhyloTree, ...]

    def __post_init__(self):
        trees = tuple(self.trees)
        if not trees:
            raise ValidationError("a tree collection needs at least one tree")
        first = trees[0].leaves
        for index, tree in enumerate(trees[1:], start=2):
            if tree.leaves != first:
                raise ValidationError(
                    f"tree {index} has leaf set differing from tree 1",
                    details=[f"only in tree 1: {sorted(first - tree.leaves)}",
                             f"only in tree {index}: {sorted(tree.leaves - first)}"]
                )
        object.__setattr__(self, 'trees', trees)

    @property
    def leaves(self) -> FrozenSet[str]:
        return self.trees[0].leaves

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        """Common leaf set in sorted order"""
        return tuple(sorted(self.leaves))

    @property
    def k(self) -> int:
        return len(self.trees)

    @property
    def n(self) -> int:
        return len(self.leaves)

    @cached_property
    def max_degree(self) -> int:
        return max(node.degree for tree in self.trees for node in tree.subtrees())

    def without(self, index: int) -> 'TreeCollection':
        """Collection with the tree at ``index`` removed"""
        return TreeCollection(self.trees[:index] + self.trees[index + 1:])

    def __iter__(self):
        return iter(self.trees)

    def __len__(self):
        return len(self.trees)
