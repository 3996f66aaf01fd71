#!/usr/bin/env python3
"""
Tests for the independent set reductions and the gadget collections
"""

import itertools
import math

import pytest

from mastgadget.models.graph import Graph, PartitionedInstance
from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.services.agreement import is_agreement_subtree, is_compatible_with
from mastgadget.services.graph_core import max_independent_set, solve_pis
from mastgadget.services.reductions import (
    ReductionService,
    control_doubleton_tree,
    control_transversal_tree,
    is_to_pis1,
    pis1_to_ast,
    pis2_to_ct,
    pis_pad,
    verify_reduction,
)
from mastgadget.services.generator import random_graph
from mastgadget.services.tree_core import enumerate_trees, refines, restrict, tree_equal, tree_stats
from mastgadget.utils.error_handler import ValidationError
from mastgadget.utils.helpers import ceil_log2


def all_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        yield Graph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])


def create_test_instance(k, size, p, edges=()):
    """k consecutive parts of the given size; edges must join different parts"""
    parts = tuple(frozenset(range(i * size + 1, (i + 1) * size + 1)) for i in range(k))
    return PartitionedInstance(Graph.from_edges(k * size, edges), parts, p)


def chain_edges(k, size):
    """First vertex of each part joined to the last vertex of the next part"""
    return [(i * size + 1, (i + 2) * size) for i in range(k - 1)]


def max_collection_degree(coll):
    return max(tree_stats(tree).max_degree for tree in coll)


# -- IS -> PIS_1 -> PIS_2 --------------------------------------------------

def test_is_to_pis1_shape():
    graph = Graph.from_edges(4, [(1, 2), (3, 4)])
    inst = is_to_pis1(3, graph)
    assert inst.graph.n == 12 and inst.k == 3 and inst.p == 1
    assert all(len(part) == 4 for part in inst.parts)
    assert inst.origin[1] == (1, 1) and inst.origin[12] == (4, 3)

    single = is_to_pis1(1, Graph(1))
    assert single.graph.n == 1 and single.graph.m == 0
    assert solve_pis(single) == frozenset({1})

    with pytest.raises(ValidationError):
        is_to_pis1(0, graph)
    with pytest.raises(ValidationError):
        is_to_pis1(2, Graph(0))


def test_pis_pad_shape():
    inst = is_to_pis1(2, Graph.from_edges(3, [(1, 2)]))
    padded = pis_pad(inst)
    assert padded.p == 2
    assert padded.graph.edges == inst.graph.edges
    assert [len(part) for part in padded.parts] == [4, 4]
    assert padded.origin[7] is None and padded.origin[8] is None
    assert padded.origin[1] == (1, 1)


def _check_pis_equivalences(n):
    for graph in all_graphs(n):
        best = max_independent_set(graph).size
        for k in (1, 2, 3):
            inst = is_to_pis1(k, graph)
            solvable = solve_pis(inst) is not None
            assert solvable == (best >= k), f"n={n} k={k} edges={graph.sorted_edges()}"
            assert (solve_pis(pis_pad(inst)) is not None) == solvable


def test_pis_reductions_preserve_answers():
    for n in range(1, 5):
        _check_pis_equivalences(n)


@pytest.mark.slow
def test_pis_reductions_preserve_answers_five_vertices():
    _check_pis_equivalences(5)


# -- PIS_1 -> agreement subtree --------------------------------------------

def test_pis1_to_ast_structure():
    inst = create_test_instance(3, 4, 1, edges=[(3, 6)])
    q, coll, report = pis1_to_ast(inst)

    assert q == 3
    assert coll.k == 1 + math.comb(12, 2) + 1
    assert coll.leaves == frozenset(str(v) for v in range(1, 13))
    assert coll.trees[0].degree == 3
    assert all(tree.degree == 5 for tree in coll.trees[1:-1])
    selection = coll.trees[-1]
    assert selection.degree == 4
    assert any(child.leaves == frozenset({'3', '6'}) for child in selection.children)
    assert report.D == 5 and report.exact_bound
    assert report.leaf_count == 12 and report.tree_count == coll.k


def test_pis1_to_ast_degree_certificate():
    for k in range(3, 9):
        graph = Graph.from_edges(3, [(1, 2)])
        q, coll, report = pis1_to_ast(is_to_pis1(k, graph))
        assert report.D == k + 2 == report.degree_bound
        assert max_collection_degree(coll) == report.D


def test_pis1_to_ast_preconditions():
    with pytest.raises(ValidationError):
        pis1_to_ast(create_test_instance(2, 3, 1))
    with pytest.raises(ValidationError):
        pis1_to_ast(create_test_instance(3, 2, 1))
    with pytest.raises(ValidationError):
        pis1_to_ast(pis_pad(create_test_instance(3, 3, 1)))


def test_agreement_control_trees_select_transversals():
    inst = create_test_instance(3, 3, 1)
    _, control, _ = pis1_to_ast(inst)
    parts = [sorted(part) for part in inst.parts]

    for choice in itertools.product(*parts):
        assert is_agreement_subtree(control_transversal_tree(choice), control)

    for subset in itertools.combinations(range(1, 10), 3):
        transversal = all(len(set(subset) & part) == 1 for part in inst.parts)
        for tree in enumerate_trees(str(v) for v in subset):
            expected = transversal and tree.degree == 3
            assert is_agreement_subtree(tree, control) == expected


def test_agreement_selection_trees_block_edges():
    edges = [(1, 4), (2, 7), (5, 9), (3, 6)]
    inst = create_test_instance(3, 3, 1, edges=edges)
    _, coll, _ = pis1_to_ast(inst)
    selections = coll.trees[-len(edges):]

    for (a, b), tree in zip(inst.graph.sorted_edges(), selections):
        for choice in itertools.product(*(sorted(part) for part in inst.parts)):
            star = control_transversal_tree(choice)
            kept = tree_equal(restrict(tree, star.leaves), star)
            assert kept == (a not in choice or b not in choice)


# -- PIS_2 -> compatible tree ----------------------------------------------

def test_pis2_to_ct_structure():
    for k in range(2, 17):
        size = 3
        inst = create_test_instance(k, size, 2, edges=chain_edges(k, size))
        q, coll, report = pis2_to_ct(inst)
        bound = 2 * ceil_log2(k) + 1

        assert q == 2 * k
        assert all(node.degree == 2 for tree in coll.trees[:2] for node in tree.subtrees() if not node.is_leaf)
        for tree in coll.trees[2:]:
            wide = [node for node in tree.subtrees() if not node.is_leaf and node.degree > 2]
            assert len(wide) <= 1
            assert all(node.degree <= bound for node in wide)
        assert report.D <= bound == report.degree_bound
        assert max_collection_degree(coll) == report.D
        assert not report.exact_bound


def test_pis2_to_ct_repair_reaches_bound():
    for k in range(2, 17):
        size = 2 * ceil_log2(k) + 1
        inst = create_test_instance(k, size, 2, edges=chain_edges(k, size))
        _, coll, report = pis2_to_ct(inst, repair=True)
        assert report.D == 2 * ceil_log2(k) + 1
        assert report.exact_bound
        assert coll.k == 2 + (k - 1) + 1


def test_pis2_to_ct_preconditions():
    with pytest.raises(ValidationError):
        pis2_to_ct(create_test_instance(2, 3, 1))
    with pytest.raises(ValidationError):
        pis2_to_ct(create_test_instance(1, 3, 2))
    with pytest.raises(ValidationError, match="compatible gadget"):
        pis2_to_ct(create_test_instance(4, 3, 2), repair=True)


def _doubleton_pairs(tree, parts):
    """The per-part pairs if the tree has the doubleton control shape, else None"""
    labels = tree.leaves
    pairs = []
    for part in parts:
        chosen = sorted(v for v in part if str(v) in labels)
        if len(chosen) != 2:
            return None
        pairs.append(tuple(chosen))
    return pairs if tree_equal(tree, control_doubleton_tree(pairs)) else None


def test_compatible_control_trees_select_doubletons():
    for size in (2, 3):
        inst = create_test_instance(2, size, 2)
        _, coll, _ = pis2_to_ct(inst)
        control = TreeCollection(coll.trees[:2])
        for subset in itertools.combinations(range(1, 2 * size + 1), 4):
            for tree in enumerate_trees(str(v) for v in subset):
                expected = _doubleton_pairs(tree, inst.parts) is not None
                assert is_compatible_with(tree, control) == expected, f"size={size} tree={tree}"


def test_compatible_selection_trees_block_edges():
    edges = [(1, 4), (2, 5), (3, 6)]
    inst = create_test_instance(2, 3, 2, edges=edges)
    _, coll, _ = pis2_to_ct(inst)
    selections = coll.trees[2:]

    for (a, b), selection in zip(inst.graph.sorted_edges(), selections):
        for first in itertools.combinations(sorted(inst.parts[0]), 2):
            for second in itertools.combinations(sorted(inst.parts[1]), 2):
                tree = control_doubleton_tree([first, second])
                kept = refines(tree, restrict(selection, tree.leaves))
                chosen = set(first) | set(second)
                assert kept == (a not in chosen or b not in chosen)


# -- verification harness --------------------------------------------------

def test_verify_triangle_is_rejected_by_both_sides():
    triangle = Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
    for mode in ('mast', 'mct'):
        record = verify_reduction(3, triangle, mode)
        assert not record.is_answer and not record.gadget_answer
        assert record.equivalent and record.passed
        assert record.note is None


def test_verify_edgeless_graph_is_accepted_by_both_sides():
    for mode in ('mast', 'mct'):
        record = verify_reduction(3, Graph(3), mode)
        assert record.is_answer and record.gadget_answer
        assert record.forward_ok and record.backward_ok
        assert record.translated_independent_set == [1, 2, 3]
        assert record.q == (3 if mode == 'mast' else 6)


def test_verify_below_gadget_threshold_solves_directly():
    record = verify_reduction(2, Graph.from_edges(2, [(1, 2)]), 'mast')
    assert record.note is not None
    assert not record.is_answer and not record.gadget_answer and record.passed


def test_verify_rejects_unknown_mode():
    with pytest.raises(ValidationError):
        verify_reduction(3, Graph(3), 'nope')


def test_verify_mast_all_small_graphs():
    service = ReductionService()
    for n in range(1, 5):
        for graph in all_graphs(n):
            record = service.verify_reduction(3, graph, 'mast')
            assert record.passed, record.to_text()


@pytest.mark.slow
def test_verify_mct_all_small_graphs():
    service = ReductionService()
    for n in range(1, 5):
        for graph in all_graphs(n):
            record = service.verify_reduction(3, graph, 'mct')
            assert record.passed, record.to_text()


@pytest.mark.slow
def test_verify_random_graphs():
    service = ReductionService()
    for seed in range(130):
        n = 5 + seed % 2
        graph = random_graph(n, seed % (n * (n - 1) // 2 + 1), seed)
        for mode in ('mast', 'mct'):
            record = service.verify_reduction(3, graph, mode)
            assert record.passed, record.to_text()


def test_verify_with_repair_tree():
    record = verify_reduction(2, Graph.from_edges(3, [(1, 2)]), 'mct', repair=True)
    assert record.is_answer and record.gadget_answer and record.passed
    assert record.D == 2 * ceil_log2(2) + 1
