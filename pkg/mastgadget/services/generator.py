"""
Seeded random graphs and tree collections
"""

import logging
import random
from typing import List, Sequence

import networkx as nx

from mastgadget.models.graph import Graph
from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.services.tree_core import restrict
from mastgadget.utils.error_handler import ValidationError

logger = logging.getLogger(__name__)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with n vertices and m edges"""
    if n < 0 or m < 0:
        raise ValidationError("vertex and edge counts must be non-negative")
    if m > n * (n - 1) // 2:
        raise ValidationError(f"a simple graph on {n} vertices has at most {n * (n - 1) // 2} edges")
    g = nx.gnm_random_graph(n, m, seed=seed)
    return Graph.from_edges(n, ((u + 1, v + 1) for u, v in g.edges()))


def leaf_labels(n: int) -> List[str]:
    return [f"t{i}" for i in range(1, n + 1)]


def random_tree(labels: Sequence[str], rng: random.Random, multifurcation: float = 0.3) -> PhyloTree:
    """Random agglomeration; with probability ``multifurcation`` three subtrees merge at once"""
    if not labels:
        raise ValidationError("random_tree needs at least one label")
    pool = [PhyloTree.leaf(label) for label in labels]
    while len(pool) > 1:
        width = 3 if len(pool) >= 3 and rng.random() < multifurcation else 2
        picked = sorted(rng.sample(range(len(pool)), width), reverse=True)
        merged = PhyloTree.node(pool[i] for i in picked)
        for i in picked:
            pool.pop(i)
        pool.append(merged)
    return pool[0]


def regraft(tree: PhyloTree, rng: random.Random) -> PhyloTree:
    """Prune a random leaf and reattach it next to, or under, a random node"""
    if tree.size < 3:
        return tree
    label = rng.choice(sorted(tree.leaves))
    rest = restrict(tree, tree.leaves - {label})
    nodes = list(rest.subtrees())
    target = nodes[rng.randrange(len(nodes))]
    under = not target.is_leaf and rng.random() < 0.5
    moved = PhyloTree.leaf(label)

    def rebuild(node: PhyloTree) -> PhyloTree:
        if node is target:
            if under:
                return PhyloTree.node(node.children + (moved,))
            return PhyloTree.node((node, moved))
        if node.is_leaf:
            return node
        return PhyloTree.node(rebuild(child) for child in node.children)

    return rebuild(rest)


def random_collection(n: int, k: int, seed: int, moves: int = 2,
                      multifurcation: float = 0.3) -> TreeCollection:
    """k perturbed copies of one random tree on n leaves"""
    if n < 1 or k < 1:
        raise ValidationError("random_collection needs n >= 1 and k >= 1")
    rng = random.Random(seed)
    base = random_tree(leaf_labels(n), rng, multifurcation)
    trees = []
    for _ in range(k):
        tree = base
        for _ in range(rng.randint(0, moves)):
            tree = regraft(tree, rng)
        trees.append(tree)
    logger.debug(f"Generated collection n={n} k={k} seed={seed}")
    return TreeCollection(tuple(trees))
