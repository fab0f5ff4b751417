"""Modular flip graphs of one-holed surfaces with marked boundary points."""

from .canon import canonical_code, equivalent, isomorphism
from .explorer import Budget, BudgetExceeded, FlipGraphStore, diameter, distance, enumerate_flip_graph
from .families import a_family, core_surface, delete_vertex, fan, zigzag
from .flips import FlipPath, flip, neighbors
from .surface import SurfaceClass, Triangulation, TriangulationError, check, validate
from .transformer import TransformReport, transform

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "FlipGraphStore", "FlipPath", "SurfaceClass", "TransformReport",
    "Triangulation", "TriangulationError", "a_family", "canonical_code", "check", "core_surface",
    "delete_vertex", "diameter", "distance", "enumerate_flip_graph", "equivalent", "fan", "flip",
    "isomorphism", "neighbors", "transform", "validate", "zigzag",
]
