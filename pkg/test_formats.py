#!/usr/bin/env python3
"""
Tests for file formats, helpers and configuration
"""

import pytest

from mastgadget.config import Config
from mastgadget.models.graph import Graph
from mastgadget.models.report import ReductionReport
from mastgadget.services.formats import (
    collection_to_text,
    graph_to_text,
    instance_to_text,
    load_tree,
    parse_collection,
    parse_graph,
    parse_instance,
    parse_partition,
    read_text,
)
from mastgadget.services.generator import random_collection
from mastgadget.services.reductions import is_to_pis1
from mastgadget.services.tree_core import parse_tree
from mastgadget.utils.error_handler import FormatError
from mastgadget.utils.helpers import ceil_log2, format_key_values, parse_key_values


def test_graph_text():
    graph = parse_graph("3 2\n1 2\n2 3\n")
    assert graph.n == 3 and graph.sorted_edges() == [(1, 2), (2, 3)]
    assert graph_to_text(graph) == "3 2\n1 2\n2 3\n"
    assert parse_graph("4 0\n") == Graph(4)


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "3 2\n1 2\n",
    "3 1\n2 1\n",
    "3 1\n1 4\n",
    "3 2\n1 2\n1 2\n",
    "3 1\n1 2\n2 3\n",
    "3 1\n1 x\n",
])
def test_graph_text_is_strict(text):
    with pytest.raises(FormatError):
        parse_graph(text)


def test_partition_and_instance_text():
    assert parse_partition("2 1\n1 3\n2 4\n") == ([[1, 3], [2, 4]], 1)
    with pytest.raises(FormatError):
        parse_partition("2 1\n1 3\n")

    inst = is_to_pis1(2, Graph.from_edges(3, [(1, 2)]))
    text = instance_to_text(inst)
    assert parse_instance(text) == inst
    assert instance_to_text(parse_instance(text)) == text


def test_instance_rejects_dependent_part():
    with pytest.raises(FormatError, match="instance file"):
        parse_instance("2 1\n1 2\n1 1\n1 2\n")


def test_collection_text():
    coll = random_collection(6, 3, seed=5)
    text = collection_to_text(coll, {'n': 6, 'k': 3})
    assert text.splitlines()[0] == "n 6 k 3"
    header, parsed = parse_collection(text)
    assert header == {'n': 6, 'k': 3}
    assert parsed == coll

    header, parsed = parse_collection("(a,b);\n\n(b,a);\n")
    assert header == {} and parsed.k == 2


@pytest.mark.parametrize("text", [
    "",
    "q 3\n",
    "q\n(a,b);\n",
    "q x\n(a,b);\n",
    "(a,b);\n(a,c);\n",
    "(a,(b);\n",
])
def test_collection_text_errors(text):
    with pytest.raises(FormatError):
        parse_collection(text)


def test_load_tree_reads_files_and_inline_text(tmp_path):
    path = tmp_path / "tree.txt"
    path.write_text("((a,b),c);\n")
    assert load_tree(str(path)) == parse_tree("((a,b),c);")
    assert load_tree("(c,(a,b));") == parse_tree("((a,b),c);")
    with pytest.raises(FormatError):
        read_text(str(tmp_path / "missing.txt"))


def test_key_value_report():
    report = ReductionReport('pis1-ast', 'aa', 'bb', q=3, k=3, D=5, degree_bound=5,
                             tree_count=68, leaf_count=12, exact_bound=True)
    fields = parse_key_values(report.to_text())
    assert fields['construction'] == 'pis1-ast'
    assert fields['exact_bound'] == 'yes'
    assert fields['D'] == '5'
    assert format_key_values({'w': [], 'x': None}) == "w=-\nx=-\n"


def test_ceil_log2():
    assert [ceil_log2(k) for k in (1, 2, 3, 4, 5, 8, 9, 16, 17)] == [0, 1, 2, 2, 3, 3, 4, 4, 5]
    with pytest.raises(ValueError):
        ceil_log2(0)


def test_config_validation(monkeypatch):
    assert Config.validate()
    monkeypatch.setattr(Config, 'MAST_CAP', 0)
    with pytest.raises(ValueError):
        Config.validate()


def test_config_verify_range(monkeypatch):
    monkeypatch.setattr(Config, 'VERIFY_MIN_VERTICES', 7)
    with pytest.raises(ValueError, match="VERIFY_MIN_VERTICES"):
        Config.validate()


def test_worker_count(monkeypatch):
    monkeypatch.setattr(Config, 'WORKERS', 3)
    assert Config.worker_count() == 3
    monkeypatch.setattr(Config, 'WORKERS', 0)
    assert Config.worker_count() >= 1


def test_config_coerces_and_rejects_raw_values(monkeypatch):
    monkeypatch.setattr(Config, 'IS_CAP', '30')
    assert Config.validate()
    assert Config.IS_CAP == 30

    monkeypatch.setattr(Config, 'SUBSET_CAP', 'abc')
    with pytest.raises(ValueError, match="subset_cap"):
        Config.validate()
