"""
Data models for trees, graphs and reduction records
"""

from .tree import PhyloTree, TreeCollection
from .graph import Graph, PartitionedInstance
from .report import ReductionReport, VerificationRecord

__all__ = [
    'PhyloTree',
    'TreeCollection',
    'Graph',
    'PartitionedInstance',
    'ReductionReport',
    'VerificationRecord'
]
