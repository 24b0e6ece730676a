"""Completing, pruning and forgetting half-ribbons."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from herg.core.gem import fresh_name
from herg.core.model import EdgeRecord, HalfRibbonRecord, Herg, VertexRecord
from herg.errors import HergError, PruneError

logger = logging.getLogger(__name__)


def complete(g: Herg) -> Herg:
    """Replace every half-ribbon by an untwisted edge to a fresh leaf.

    The edge takes the half-ribbon's name, the leaf is ``<name>_leaf`` and its
    dart ``<name>_tip`` (with a counter on collision).
    """
    g.require_valid("complete")
    vertex_names = {vx.name for vx in g.vertices}
    dart_names = set(g.darts)
    vertices = list(g.vertices)
    edges = list(g.edges)
    for hr in g.halves:
        leaf = fresh_name(f"{hr.name}_leaf", vertex_names)
        tip = fresh_name(f"{hr.name}_tip", dart_names)
        vertices.append(VertexRecord(leaf, (tip,)))
        edges.append(EdgeRecord(hr.name, (hr.dart, tip)))
    return Herg(tuple(vertices), tuple(edges), ())


def completion_leaves(g: Herg, completed: Herg) -> set[str]:
    """Names of the leaves ``complete(g)`` added."""
    return {vx.name for vx in completed.vertices} - {vx.name for vx in g.vertices}


def prune(g: Herg, leaves: Iterable[str]) -> Herg:
    """Turn each named leaf's edge back into a half-ribbon on the other end."""
    g.require_valid("prune")
    wanted = sorted(set(leaves))
    doomed_edges: dict[str, str] = {}
    for label in wanted:
        if label not in g.vertex:
            raise PruneError(label, "no such vertex")
        rotation = g.vertex[label].rotation
        if any(d in g.half_of for d in rotation):
            raise PruneError(label, "leaf carries a half-ribbon")
        if len(rotation) != 1 or g.is_loop(g.edge_of[rotation[0]].name):
            raise PruneError(label, "not a degree-1 vertex")
        ed = g.edge_of[rotation[0]]
        if ed.twisted:
            raise PruneError(label, f"incident edge {ed.name} is twisted")
        if ed.name in doomed_edges.values():
            raise PruneError(label, f"both ends of edge {ed.name} are being pruned")
        doomed_edges[label] = ed.name

    vertices = [vx for vx in g.vertices if vx.name not in doomed_edges]
    dropped = set(doomed_edges.values())
    edges = [ed for ed in g.edges if ed.name not in dropped]
    halves = list(g.halves)
    for label, name in doomed_edges.items():
        tip = g.vertex[label].rotation[0]
        halves.append(HalfRibbonRecord(name, g.partner(tip)))
        logger.debug("pruned leaf %s: edge %s becomes a half-ribbon", label, name)
    return Herg(tuple(vertices), tuple(edges), tuple(halves))


def underlying(g: Herg) -> Herg:
    """The ribbon graph left after forgetting every half-ribbon."""
    gone = set(g.half_of)
    vertices = tuple(
        VertexRecord(vx.name, tuple(d for d in vx.rotation if d not in gone))
        for vx in g.vertices
    )
    return Herg(vertices, g.edges, ())


def flip(g: Herg, vertex: str) -> Herg:
    """Turn one vertex disc over: reverse its rotation and toggle the twist of
    every edge with exactly one end there."""
    g.require_valid("flip")
    if vertex not in g.vertex:
        raise HergError(f"unknown vertex label '{vertex}'")
    here = set(g.vertex[vertex].rotation)
    vertices = tuple(
        VertexRecord(vx.name, tuple(reversed(vx.rotation)) if vx.name == vertex else vx.rotation)
        for vx in g.vertices
    )
    edges = tuple(
        EdgeRecord(ed.name, ed.darts, ed.twisted ^ ((ed.darts[0] in here) != (ed.darts[1] in here)))
        for ed in g.edges
    )
    return Herg(vertices, edges, g.halves)
