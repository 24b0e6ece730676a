"""Boundary tracing, connectivity, genus and the internal/external taxonomy."""

from .faces import trace_boundary
from .invariants import (
    classify,
    edge_class,
    completed_euler,
    components,
    embedding_signature,
    euler_genus,
    is_bridge,
    orientable,
    puncture_range,
    rank_nullity,
)

__all__ = [
    "classify",
    "edge_class",
    "completed_euler",
    "components",
    "embedding_signature",
    "euler_genus",
    "is_bridge",
    "orientable",
    "puncture_range",
    "rank_nullity",
    "trace_boundary",
]
