#!/usr/bin/env python3
"""
Tests for the brute-force and bounded-search MAST / MCT solvers
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mastgadget.models.tree import TreeCollection
from mastgadget.services.agreement import is_agreement_subtree, is_compatible_with
from mastgadget.services.generator import random_collection
from mastgadget.services.solvers import (
    SolverService,
    mast_bruteforce,
    mast_fpt,
    mct_bruteforce,
    mct_fpt,
)
from mastgadget.services.tree_core import caterpillar, parse_tree, serialize_tree
from mastgadget.utils.error_handler import CapExceededError, ValidationError


def create_test_collection(*texts):
    return TreeCollection(tuple(parse_tree(text) for text in texts))


def create_star_and_cherry():
    return create_test_collection("(a,b,c);", "((a,b),c);")


def test_single_tree_is_its_own_optimum():
    tree = parse_tree("((a,b),(c,(d,e)),f);")
    coll = TreeCollection((tree,))
    assert mast_bruteforce(coll) == (6, tree)
    assert mct_bruteforce(coll) == (6, tree)


def test_mast_bruteforce_examples():
    coll = TreeCollection((caterpillar(list('abcd')), caterpillar(list('dcba'))))
    solution = mast_bruteforce(coll)
    assert solution.size == 2
    assert serialize_tree(solution.witness) == "(a,b);"

    assert mast_bruteforce(create_star_and_cherry()).size == 2


def test_mct_bruteforce_examples():
    solution = mct_bruteforce(create_star_and_cherry())
    assert solution.size == 3
    assert serialize_tree(solution.witness) == "((a,b),c);"

    for n in range(2, 8):
        labels = [f"v{i}" for i in range(1, n + 1)]
        coll = TreeCollection((caterpillar(labels), caterpillar(labels[::-1])))
        assert mct_bruteforce(coll).size == 2


def test_bruteforce_caps():
    coll = random_collection(6, 2, seed=1)
    with pytest.raises(CapExceededError):
        mast_bruteforce(coll, cap=5)
    with pytest.raises(CapExceededError):
        mct_bruteforce(coll, cap=5)


def test_fpt_examples():
    tree = parse_tree("((a,b),(c,d));")
    assert mast_fpt(TreeCollection((tree, tree)), 0) == tree

    coll = create_star_and_cherry()
    assert mast_fpt(coll, 0) is None
    assert mast_fpt(coll, 1).size == 2
    assert serialize_tree(mct_fpt(coll, 0)) == "((a,b),c);"

    assert mct_fpt(create_test_collection("((a,b),c);", "((a,c),b);"), 0) is None
    with pytest.raises(ValidationError):
        mast_fpt(coll, -1)


def test_decision_versions_follow_optimum():
    for seed in range(15):
        coll = random_collection(7, 3, seed, moves=3)
        solvers = SolverService()
        mast_size = solvers.mast_bruteforce(coll).size
        mct_size = solvers.mct_bruteforce(coll).size
        for q in range(1, coll.n + 2):
            agreement = solvers.has_agreement_subtree(coll, q)
            compatible = solvers.has_compatible_tree(coll, q)
            assert (agreement is not None) == (q <= mast_size)
            assert (compatible is not None) == (q <= mct_size)
            if agreement is not None:
                assert agreement.size == q and is_agreement_subtree(agreement, coll)
            if compatible is not None:
                assert compatible.size == q and is_compatible_with(compatible, coll)


def test_removing_a_tree_never_shrinks_the_optimum():
    for seed in range(20):
        coll = random_collection(6 + seed % 3, 2 + seed % 3, seed, moves=3)
        mast_size = mast_bruteforce(coll).size
        mct_size = mct_bruteforce(coll).size
        for i in range(coll.k):
            smaller = coll.without(i)
            assert smaller.k == coll.k - 1
            assert mast_bruteforce(smaller).size >= mast_size, f"mast seed={seed} i={i}"
            assert mct_bruteforce(smaller).size >= mct_size, f"mct seed={seed} i={i}"


def test_decision_version_guards():
    coll = random_collection(6, 2, seed=3)
    with pytest.raises(ValidationError):
        SolverService().has_agreement_subtree(coll, 0)
    with pytest.raises(CapExceededError):
        SolverService(subset_cap=10).has_compatible_tree(coll, 3)


def check_solvers_agree(n, k, seed):
    coll = random_collection(n, k, seed, moves=3)
    mast = mast_bruteforce(coll)
    mct = mct_bruteforce(coll)

    assert is_agreement_subtree(mast.witness, coll) and mast.witness.size == mast.size
    assert is_compatible_with(mct.witness, coll) and mct.witness.size == mct.size
    assert mast.size <= mct.size

    for p in range(5):
        found = mast_fpt(coll, p)
        assert (found is not None) == (mast.size >= n - p), f"mast p={p} seed={seed}"
        if found is not None:
            assert found.size >= n - p and is_agreement_subtree(found, coll)

        found = mct_fpt(coll, p)
        assert (found is not None) == (mct.size >= n - p), f"mct p={p} seed={seed}"
        if found is not None:
            assert found.size >= n - p and is_compatible_with(found, coll)


@pytest.mark.property_based
@given(st.integers(3, 9), st.integers(1, 4), st.integers(0, 2 ** 31))
@settings(max_examples=60, deadline=None)
def test_fpt_matches_bruteforce(n, k, seed):
    check_solvers_agree(n, k, seed)


@pytest.mark.slow
def test_fpt_matches_bruteforce_grid():
    for seed in range(500):
        check_solvers_agree(3 + seed % 7, 1 + seed % 4, seed)


def test_parallel_scan_is_deterministic():
    coll = random_collection(14, 3, seed=11, moves=2)
    serial = SolverService(workers=1)
    parallel = SolverService(workers=2)
    for q in (10, 12):
        assert serial.has_agreement_subtree(coll, q) == parallel.has_agreement_subtree(coll, q)
        assert serial.has_compatible_tree(coll, q) == parallel.has_compatible_tree(coll, q)
