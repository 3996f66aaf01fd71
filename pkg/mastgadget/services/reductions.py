"""
Gadget reductions from independent set to agreement and compatible trees
"""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from mastgadget.models.graph import Graph, PartitionedInstance
from mastgadget.models.report import ReductionReport, VerificationRecord
from mastgadget.models.tree import PhyloTree, TreeCollection
from mastgadget.services.agreement import is_agreement_subtree, is_compatible_with
from mastgadget.services.formats import collection_to_text, instance_to_text
from mastgadget.services.graph_core import GraphService, is_independent
from mastgadget.services.solvers import SolverService
from mastgadget.services.tree_core import (
    balanced_tree,
    caterpillar,
    collapse_leaf_path,
    collapse_path_above,
    restrict,
    serialize_tree,
    substitute,
)
from mastgadget.utils.error_handler import ValidationError
from mastgadget.utils.helpers import ceil_log2, instance_digest
from mastgadget.utils.validators import validate_pis1_to_ast, validate_pis2_to_ct

logger = logging.getLogger(__name__)

AST_CONSTRUCTION = 'pis1-ast'
CT_CONSTRUCTION = 'pis2-ct'


def pis1_vertex(n: int, u: int, i: int) -> int:
    """Dense id of (u, i) in V x {1..k}"""
    return (i - 1) * n + u


def is_to_pis1(k: int, graph: Graph) -> PartitionedInstance:
    """k copies of V; (u, i) ~ (v, j) iff i != j and (u = v or uv is an edge)"""
    if k < 1:
        raise ValidationError(f"k must be a positive integer, got {k}")
    if graph.n == 0:
        raise ValidationError("is_to_pis1 needs a nonempty graph")
    n = graph.n
    edges = set()
    for i, j in itertools.combinations(range(1, k + 1), 2):
        for u in graph.vertices:
            edges.add((pis1_vertex(n, u, i), pis1_vertex(n, u, j)))
        for u, v in graph.edges:
            edges.add((pis1_vertex(n, u, i), pis1_vertex(n, v, j)))
            edges.add((pis1_vertex(n, v, i), pis1_vertex(n, u, j)))
    parts = tuple(frozenset(pis1_vertex(n, u, i) for u in graph.vertices) for i in range(1, k + 1))
    origin = {pis1_vertex(n, u, i): (u, i) for i in range(1, k + 1) for u in graph.vertices}
    logger.info(f"is_to_pis1: k={k}, {k * n} vertices, {len(edges)} edges")
    return PartitionedInstance(Graph.from_edges(k * n, edges), parts, 1, origin)


def pis_pad(inst: PartitionedInstance) -> PartitionedInstance:
    """Add one fresh isolated vertex to every part; PIS_p becomes PIS_{p+1}"""
    n = inst.graph.n
    base = inst.origin or {v: (v, i) for v, i in inst.part_index.items()}
    origin: Dict[int, Optional[Tuple[int, int]]] = dict(base)
    parts = []
    for i, part in enumerate(inst.parts, start=1):
        parts.append(part | {n + i})
        origin[n + i] = None
    graph = Graph(n + inst.k, inst.graph.edges)
    return PartitionedInstance(graph, tuple(parts), inst.p + 1, origin)


def _sorted_part_labels(part) -> List[str]:
    return [str(v) for v in sorted(part)]


def _report(construction: str, inst: PartitionedInstance, coll: TreeCollection,
            q: int, bound: int, exact: bool) -> ReductionReport:
    report = ReductionReport(
        construction=construction,
        source_digest=instance_digest(instance_to_text(inst)),
        produced_digest=instance_digest(collection_to_text(coll)),
        q=q,
        k=inst.k,
        D=coll.max_degree,
        degree_bound=bound,
        tree_count=coll.k,
        leaf_count=coll.n,
        exact_bound=exact,
    )
    logger.info(f"{construction}: {coll.k} trees on {coll.n} leaves, q={q}, D={report.D} (bound {bound})")
    return report


def pis1_to_ast(inst: PartitionedInstance) -> Tuple[int, TreeCollection, ReductionReport]:
    """Control trees C, C_{a,b} and selection trees S_e over binary part trees B_i"""
    errors = validate_pis1_to_ast(inst.k, [len(part) for part in inst.parts], inst.p)
    if errors:
        raise ValidationError("Instance does not meet the agreement gadget preconditions", details=errors)

    # Part trees
    part_labels = [_sorted_part_labels(part) for part in inst.parts]
    blocks = [caterpillar(labels) for labels in part_labels]

    def without(removed: frozenset) -> List[PhyloTree]:
        return [restrict(block, block.leaves - removed) for block in blocks]

    # Control tree C, then one C_ab per vertex pair
    trees = [PhyloTree.node(blocks)]
    every = sorted(inst.graph.vertices)
    for a, b in itertools.combinations(every, 2):
        pair = frozenset((str(a), str(b)))
        trees.append(PhyloTree.node(without(pair) + [PhyloTree.leaf(str(a)), PhyloTree.leaf(str(b))]))
    # Selection trees
    for a, b in inst.graph.sorted_edges():
        pair = frozenset((str(a), str(b)))
        cherry = PhyloTree.node((PhyloTree.leaf(str(a)), PhyloTree.leaf(str(b))))
        trees.append(PhyloTree.node(without(pair) + [cherry]))

    coll = TreeCollection(tuple(trees))
    q = inst.k
    return q, coll, _report(AST_CONSTRUCTION, inst, coll, q, inst.k + 2, True)


def repair_min_part_size(k: int) -> int:
    return 2 * ceil_log2(k) + 1


def pis2_to_ct(inst: PartitionedInstance, repair: bool = False) -> Tuple[int, TreeCollection, ReductionReport]:
    """Control trees H_k[B], H_k[reversed B] and selection trees grafted at lambda_k^{i,j}"""
    k = inst.k
    errors = validate_pis2_to_ct(k, inst.part_size, inst.p, repair, repair_min_part_size(k))
    if errors:
        raise ValidationError("Instance does not meet the compatible gadget preconditions", details=errors)

    # One caterpillar per part, and its reverse
    part_labels = [_sorted_part_labels(part) for part in inst.parts]
    blocks = [caterpillar(labels) for labels in part_labels]
    reversed_blocks = [caterpillar(labels[::-1]) for labels in part_labels]
    shape = balanced_tree(k)

    # Control trees
    trees = [substitute(shape, blocks), substitute(shape, reversed_blocks)]

    # One selection tree per edge
    for a, b in inst.graph.sorted_edges():
        i, j = inst.part_index[a], inst.part_index[b]
        collapsed, lam = collapse_leaf_path(shape, str(i), str(j))
        dropped = frozenset((str(a), str(b)))
        cherry = PhyloTree.node((PhyloTree.leaf(str(a)), PhyloTree.leaf(str(b))))

        def graft(node: PhyloTree) -> PhyloTree:
            if node.is_leaf:
                block = blocks[int(node.label) - 1]
                return restrict(block, block.leaves - dropped)
            kids = [graft(child) for child in node.children]
            if node.leaves == lam.leaves:
                kids.append(cherry)
            return PhyloTree.node(kids)

        # Cherry {a, b} hangs at the merged node
        trees.append(graft(collapsed))

    bound = 2 * ceil_log2(k) + 1
    # Repair tree reaches the degree bound exactly
    if repair:
        coarse = collapse_path_above(blocks[0], part_labels[0][0], 2 * ceil_log2(k) - 1)
        trees.append(substitute(shape, [coarse] + blocks[1:]))

    coll = TreeCollection(tuple(trees))
    q = 2 * k
    return q, coll, _report(CT_CONSTRUCTION, inst, coll, q, bound, repair)


def control_transversal_tree(choice: Sequence[int]) -> PhyloTree:
    """<c_1, ..., c_k>"""
    leaves = [PhyloTree.leaf(str(c)) for c in choice]
    return leaves[0] if len(leaves) == 1 else PhyloTree.node(leaves)


def control_doubleton_tree(pairs: Sequence[Tuple[int, int]]) -> PhyloTree:
    """H_k[<a_1, b_1>, ..., <a_k, b_k>]"""
    cherries = [PhyloTree.node((PhyloTree.leaf(str(a)), PhyloTree.leaf(str(b)))) for a, b in pairs]
    return substitute(balanced_tree(len(pairs)), cherries)


class ReductionService:
    """Runs both sides of a reduction and cross-checks them"""

    def __init__(self, graphs: Optional[GraphService] = None, solvers: Optional[SolverService] = None):
        self.graphs = graphs or GraphService()
        self.solvers = solvers or SolverService()

    def verify_reduction(self, k: int, graph: Graph, mode: str, repair: bool = False) -> VerificationRecord:
        if mode not in ('mast', 'mct'):
            raise ValidationError(f"mode must be mast or mct, got {mode!r}")
        # Source side
        best = self.graphs.max_independent_set(graph)
        record = VerificationRecord(
            mode=mode, k=k, vertices=graph.n, edges=graph.m,
            max_independent_set=best.size, is_answer=best.size >= k, gadget_answer=False,
        )
        inst = is_to_pis1(k, graph)
        if record.is_answer:
            record.is_witness = sorted(best.witness)[:k]

        # Gadget preconditions
        if mode == 'mast':
            target = inst
            errors = validate_pis1_to_ast(target.k, [len(part) for part in target.parts], target.p)
        else:
            target = pis_pad(inst)
            errors = validate_pis2_to_ct(target.k, target.part_size, target.p, repair,
                                         repair_min_part_size(target.k))
        if errors:
            return self._verify_directly(record, inst, graph)

        # Gadget side
        if mode == 'mast':
            q, coll, report = pis1_to_ast(target)
            witness = self.solvers.has_agreement_subtree(coll, q)
        else:
            q, coll, report = pis2_to_ct(target, repair)
            witness = self.solvers.has_compatible_tree(coll, q)

        record.q = q
        record.D = report.D
        record.gadget_answer = witness is not None

        # Backward: gadget witness to an independent set
        if witness is not None:
            record.gadget_witness = serialize_tree(witness)
            record.translated_independent_set = self._translate_back(target, [int(l) for l in witness.leaves])
            record.backward_ok = (len(record.translated_independent_set) == k
                                  and is_independent(graph, record.translated_independent_set))

        # Forward: independent set to a control-form tree
        if record.is_answer:
            chosen = [pis1_vertex(graph.n, u, i) for i, u in enumerate(record.is_witness, start=1)]
            if mode == 'mast':
                tree = control_transversal_tree(chosen)
                record.forward_ok = tree.size == q and is_agreement_subtree(tree, coll)
            else:
                pads = [inst.graph.n + i for i in range(1, k + 1)]
                tree = control_doubleton_tree(list(zip(chosen, pads)))
                record.forward_ok = tree.size == q and is_compatible_with(tree, coll)
            record.translated_tree = serialize_tree(tree)

        logger.info(f"verify {mode}: k={k} n={graph.n} m={graph.m} IS={record.is_answer} "
                    f"gadget={record.gadget_answer} equivalent={record.equivalent}")
        return record

    def _verify_directly(self, record: VerificationRecord, inst: PartitionedInstance,
                         graph: Graph) -> VerificationRecord:
        """Below the gadget's size threshold the PIS_1 instance is solved as is"""
        record.note = 'below gadget threshold; PIS_1 solved directly'
        found = self.graphs.solve_pis(inst)
        record.gadget_answer = found is not None
        if found is not None:
            record.translated_independent_set = self._translate_back(inst, sorted(found))
            record.backward_ok = (len(record.translated_independent_set) == record.k
                                  and is_independent(graph, record.translated_independent_set))
        if record.is_answer:
            chosen = {pis1_vertex(graph.n, u, i) for i, u in enumerate(record.is_witness, start=1)}
            record.forward_ok = (is_independent(inst.graph, chosen)
                                 and all(len(part & chosen) == 1 for part in inst.parts))
        logger.info(f"verify {record.mode} (direct): IS={record.is_answer} PIS={record.gadget_answer}")
        return record

    @staticmethod
    def _translate_back(inst: PartitionedInstance, vertices: Sequence[int]) -> List[int]:
        """One source vertex per part: the smallest non-padding witness vertex in it"""
        by_part: Dict[int, List[int]] = {}
        for v in sorted(vertices):
            if inst.origin.get(v) is None:
                continue
            by_part.setdefault(inst.part_index[v], []).append(v)
        return sorted({inst.origin[members[0]][0] for members in by_part.values()})


def verify_reduction(k: int, graph: Graph, mode: str, repair: bool = False) -> VerificationRecord:
    return ReductionService().verify_reduction(k, graph, mode, repair)
