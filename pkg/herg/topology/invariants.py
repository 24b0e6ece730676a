"""Connectivity, rank/nullity, orientability, genus and the internal/external taxonomy."""

from __future__ import annotations

import logging

import networkx as nx

from herg.core.gem import side_system
from herg.core.model import Herg
from herg.core.ops import complete
from herg.topology.faces import report_from_sides, trace_boundary
from herg.utils.typing import (
    Classification,
    EdgeClass,
    EmbeddingSignature,
    EulerData,
    FaceReport,
)

logger = logging.getLogger(__name__)


def incidence_graph(g: Herg) -> nx.MultiGraph:
    """Vertices and edges of ``g`` as a networkx multigraph; half-ribbons do not connect."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(vx.name for vx in g.vertices)
    for ed in g.edges:
        a, b = ed.darts
        graph.add_edge(g.vertex_of[a], g.vertex_of[b], key=ed.name, twisted=ed.twisted)
    return graph


def components(g: Herg) -> tuple[int, list[list[str]]]:
    parts = sorted(sorted(c) for c in nx.connected_components(incidence_graph(g)))
    return len(parts), parts


def rank_nullity(g: Herg) -> tuple[int, int]:
    k, _ = components(g)
    r = g.v - k
    return r, g.e - r


def flip_parities(g: Herg) -> dict[str, int] | None:
    """Per-vertex flips that untwist every edge, or ``None`` if none exist."""
    graph = incidence_graph(g)
    bit: dict[str, int] = {}
    for comp in nx.connected_components(graph):
        root = min(comp)
        bit[root] = 0
        for u, w in nx.bfs_edges(graph, root):
            twisted = next(iter(graph.get_edge_data(u, w).values()))["twisted"]
            bit[w] = bit[u] ^ int(twisted)
    for u, w, data in graph.edges(data=True):
        if bit[u] ^ bit[w] ^ int(data["twisted"]):
            return None
    return bit


def orientable(g: Herg) -> bool:
    return flip_parities(g) is not None


def euler_genus(g: Herg, report: FaceReport | None = None) -> EulerData:
    report = report or trace_boundary(g)
    k, _ = components(g)
    chi = g.v - g.e + report.f_int + report.c_ext
    gamma = 2 * k - chi
    return EulerData(
        chi=chi,
        gamma=gamma,
        orientable_genus=gamma // 2 if orientable(g) else None,
    )


def puncture_range(g: Herg) -> tuple[int, int]:
    """Admissible boundary-circle counts of a punctured surface hosting ``g``."""
    return trace_boundary(g).c_ext, g.h


def embedding_signature(g: Herg) -> EmbeddingSignature:
    report = trace_boundary(g)
    euler = euler_genus(g, report)
    return EmbeddingSignature(
        orientable=orientable(g),
        genus=euler.gamma,
        punctures_proper=report.c_ext,
        punctures_hproper=g.h,
        chi=euler.chi,
    )


def is_bridge(g: Herg, name: str) -> bool:
    if g.is_loop(name):
        return False
    graph = incidence_graph(g)
    before = nx.number_connected_components(graph)
    a, b = g.edge[name].darts
    graph.remove_edge(g.vertex_of[a], g.vertex_of[b], key=name)
    return nx.number_connected_components(graph) > before


def _lonely_halves(g: Herg, report: FaceReport) -> set[str]:
    return {o.crossings[0] for o in report.orbits if len(o.crossings) == 1}


def edge_class(g: Herg, name: str) -> EdgeClass:
    """Class of a non-loop edge from the two half-ribbons cutting it would create."""
    from herg.edit.operations import cut_edge

    if g.is_loop(name):
        return "loop"
    cut = cut_edge(g, name)
    created = [cut.half_of[d].name for d in g.edge[name].darts]
    alone = _lonely_halves(cut, report_from_sides(cut, side_system(cut)))
    inside = sum(1 for x in created if x in alone)
    return ("external", "semi-internal", "internal")[inside]


def classify(g: Herg) -> Classification:
    report = trace_boundary(g)
    lonely = _lonely_halves(g, report)
    hr_internal = sorted(hr.name for hr in g.halves if hr.name in lonely)
    hr_external = sorted(hr.name for hr in g.halves if hr.name not in lonely)

    edge_classes = {ed.name: edge_class(g, ed.name) for ed in g.edges}
    loops = [name for name, c in edge_classes.items() if c == "loop"]

    vertex_classes = {
        vx.name: ("external" if g.halves_at(vx.name) else "internal")
        for vx in g.vertices
    }
    v_ext = sum(1 for c in vertex_classes.values() if c == "external")
    return Classification(
        hr_internal=hr_internal,
        hr_external=hr_external,
        edge_classes=edge_classes,
        bridges=[ed.name for ed in g.edges if is_bridge(g, ed.name)],
        loops=loops,
        vertex_classes=vertex_classes,
        v_int=g.v - v_ext,
        v_ext=v_ext,
    )


def completed_euler(g: Herg) -> int:
    """χ of the completed ribbon graph; every half-ribbon becomes an edge to a leaf."""
    return euler_genus(complete(g)).chi
