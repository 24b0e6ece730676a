"""Edge operations and subgraph enumeration."""

from .operations import contract_edge, cut_edge, delete_edge
from .subgraphs import enumerate_subgraphs, spanning_subgraph, subgraph_stats

__all__ = [
    "contract_edge",
    "cut_edge",
    "delete_edge",
    "enumerate_subgraphs",
    "spanning_subgraph",
    "subgraph_stats",
]
