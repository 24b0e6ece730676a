"""Herg value type, validation and structural operations."""

from .iso import canonical_form, canonical_key, isomorphic
from .model import EdgeRecord, HalfRibbonRecord, Herg, VertexRecord, validate
from .ops import complete, completion_leaves, flip, prune, underlying

__all__ = [
    "EdgeRecord",
    "HalfRibbonRecord",
    "Herg",
    "VertexRecord",
    "canonical_form",
    "canonical_key",
    "complete",
    "completion_leaves",
    "flip",
    "isomorphic",
    "prune",
    "underlying",
    "validate",
]
