"""Drawings of 1-planar graphs, their unavoidable structures, a discharging
engine, and colouring solvers built on them."""

from __future__ import annotations

from .drawing import OnePlaneDrawing, faces, recover_original, validate
from .errors import (DrawingError, FormatError, InputError, OnePlanarError, PreconditionError,
                     ValidationError)
from .graphcore import Graph

__version__ = "0.1.0"

__all__ = [
    "DrawingError", "FormatError", "Graph", "InputError", "OnePlaneDrawing", "OnePlanarError",
    "PreconditionError", "ValidationError", "faces", "recover_original", "validate",
]
