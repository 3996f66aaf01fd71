"""
mastgadget: agreement and compatible subtrees of leaf-labeled trees,
exact solvers for them, and the gadget reductions from independent set.
"""

__version__ = '0.1.0'
