"""
Reduction provenance and verification records
"""

from dataclasses import dataclass, field
from typing import List, Optional

from mastgadget.utils.helpers import format_key_values


@dataclass
class ReductionReport:
    """Ties a produced instance to its source with degree and size certificates"""
    construction: str
    source_digest: str
    produced_digest: str
    q: int
    k: int
    D: int
    degree_bound: int
    tree_count: int
    leaf_count: int
    exact_bound: bool = False

    def to_dict(self):
        return {
            'construction': self.construction,
            'source_digest': self.source_digest,
            'produced_digest': self.produced_digest,
            'q': self.q,
            'k': self.k,
            'D': self.D,
            'degree_bound': self.degree_bound,
            'exact_bound': self.exact_bound,
            'tree_count': self.tree_count,
            'leaf_count': self.leaf_count
        }

    def to_text(self) -> str:
        return format_key_values(self.to_dict())


@dataclass
class VerificationRecord:
    """Both sides of one reduction run and the translated witnesses"""
    mode: str
    k: int
    vertices: int
    edges: int
    max_independent_set: int
    is_answer: bool
    gadget_answer: bool
    q: Optional[int] = None
    D: Optional[int] = None
    is_witness: List[int] = field(default_factory=list)
    gadget_witness: Optional[str] = None
    translated_independent_set: List[int] = field(default_factory=list)
    translated_tree: Optional[str] = None
    forward_ok: Optional[bool] = None
    backward_ok: Optional[bool] = None
    note: Optional[str] = None

    @property
    def equivalent(self) -> bool:
        return self.is_answer == self.gadget_answer

    @property
    def passed(self) -> bool:
        return self.equivalent and self.forward_ok is not False and self.backward_ok is not False

    def to_dict(self):
        return {
            'mode': self.mode,
            'k': self.k,
            'vertices': self.vertices,
            'edges': self.edges,
            'max_independent_set': self.max_independent_set,
            'is_answer': self.is_answer,
            'gadget_answer': self.gadget_answer,
            'equivalent': self.equivalent,
            'q': self.q,
            'D': self.D,
            'is_witness': self.is_witness,
            'gadget_witness': self.gadget_witness,
            'translated_independent_set': self.translated_independent_set,
            'translated_tree': self.translated_tree,
            'forward_ok': self.forward_ok,
            'backward_ok': self.backward_ok,
            'note': self.note
        }

    def to_text(self) -> str:
        return format_key_values(self.to_dict())
