"""
Service layer: tree kernel, oracles, solvers and reductions
"""

from .graph_core import GraphService
from .solvers import SolverService
from .reductions import ReductionService

__all__ = [
    'GraphService',
    'SolverService',
    'ReductionService'
]
