"""Edge deletion, cut and contraction."""

from __future__ import annotations

import logging

from herg.core.gem import LEFT, RIGHT, Side, assemble, faces, fresh_name, rewire, side_system
from herg.core.model import EdgeRecord, HalfRibbonRecord, Herg, VertexRecord
from herg.errors import UnknownEdgeError

logger = logging.getLogger(__name__)


def _edge(g: Herg, name: str) -> EdgeRecord:
    g.require_valid("edit")
    if name not in g.edge:
        raise UnknownEdgeError(name)
    return g.edge[name]


def delete_edge(g: Herg, name: str) -> Herg:
    ed = _edge(g, name)
    gone = set(ed.darts)
    vertices = tuple(
        VertexRecord(vx.name, tuple(d for d in vx.rotation if d not in gone))
        for vx in g.vertices
    )
    edges = tuple(x for x in g.edges if x.name != name)
    return Herg(vertices, edges, g.halves)


def cut_names(g: Herg, name: str) -> tuple[str, str]:
    """Labels of the two half-ribbons ``cut_edge`` creates: ``<e>_h1``, ``<e>_h2``."""
    taken = g.taken_names() | {f"{name}_h"}
    return fresh_name(f"{name}_h", taken), fresh_name(f"{name}_h", taken)


def cut_edge(g: Herg, name: str) -> Herg:
    """Swap the edge for two half-ribbons on the same darts; rotations stay put."""
    ed = _edge(g, name)
    first, second = cut_names(g, name)
    halves = g.halves + (
        HalfRibbonRecord(first, ed.darts[0]),
        HalfRibbonRecord(second, ed.darts[1]),
    )
    edges = tuple(x for x in g.edges if x.name != name)
    return Herg(g.vertices, edges, halves)


def contract_edge(g: Herg, name: str) -> Herg:
    """Contract an edge, loops included.

    Corners that ran into the edge are reconnected along its sides, so a
    non-loop edge merges its ends (flipping one of them first when twisted),
    an untwisted loop splits its vertex in two and a twisted loop keeps one
    vertex with the far arc reversed. Face cycles running only along the edge
    become bare vertices.
    """
    ed = _edge(g, name)
    ss = side_system(g)
    removed: set[Side] = {(d, lr) for d in ed.darts for lr in (LEFT, RIGHT)}
    corner = rewire(ss.corner, removed, through=ss.seam)
    hinge = {s: t for s, t in ss.hinge.items() if s not in removed}
    seam = {s: t for s, t in ss.seam.items() if s not in removed}
    enclosed = sum(1 for cycle in faces(ss) if removed.issuperset(cycle))

    ends = [g.vertex_of[d] for d in ed.darts]
    taken = {vx.name for vx in g.vertices}
    used: set[str] = set(ss.bare)

    def vertex_names(cycles: list[list[Side]]) -> list[str]:
        names: list[str] = [""] * len(cycles)
        for i in sorted(range(len(cycles)), key=lambda j: min(s[0] for s in cycles[j])):
            olds = sorted({g.vertex_of[s[0]] for s in cycles[i]})
            free = [n for n in olds if n not in used]
            names[i] = free[0] if free else fresh_name(olds[0], taken)
            used.add(names[i])
        return names

    def owner(side: Side) -> tuple[str, str]:
        d = side[0]
        if d in g.edge_of:
            return "edge", g.edge_of[d].name
        return "half", g.half_of[d].name

    # bare names are settled after the rotations claim theirs
    created: list[str] = []

    def names_then_bare(cycles: list[list[Side]]) -> list[str]:
        names = vertex_names(cycles)
        for _ in range(enclosed):
            free = [n for n in dict.fromkeys(ends) if n not in used]
            label = free[0] if free else fresh_name(ends[0], taken)
            used.add(label)
            created.append(label)
        return names

    h, _ = assemble(
        corner,
        hinge,
        seam,
        dart_name=lambda s: s[0],
        owner=owner,
        vertex_names=names_then_bare,
        bare=ss.bare,
    )
    result = Herg(
        h.vertices + tuple(VertexRecord(n) for n in created), h.edges, h.halves
    )
    logger.debug(
        "contracted %s: v %d -> %d, %d enclosed face(s)", name, g.v, result.v, enclosed
    )
    return result
