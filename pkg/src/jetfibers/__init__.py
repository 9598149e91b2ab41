"""Exact computation of singular fibers of jet schemes for the A-series and
D4 surface singularities: jet equations, component ideals, intersection
decompositions, certificate verification, and the maximal-intersection graph.
"""

from .kernel import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
