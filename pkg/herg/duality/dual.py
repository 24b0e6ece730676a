"""Geometric duals of Hergs.

The dual exchanges the roles of ``hinge`` and ``seam`` in the side system:
boundary components become vertices, each seam pair becomes a dart, and an
edge's two seam pairs are joined across the old vertex disc. A half-ribbon's
single seam pair stays unpaired, so half-ribbons dualize to half-ribbons.
"""

from __future__ import annotations

import logging

from herg.core.gem import Side, assemble, fresh_name, side_system
from herg.core.model import Herg
from herg.utils.typing import DualWitness

logger = logging.getLogger(__name__)


def _dart_names(g: Herg, seam: dict[Side, Side]) -> dict[Side, str]:
    names: dict[Side, str] = {}
    for ed in g.edges:
        sides = sorted((d, lr) for d in ed.darts for lr in (0, 1))
        first = sides[0]
        for s in sides:
            names[s] = f"{ed.name}_a" if s in (first, seam[first]) else f"{ed.name}_b"
    for hr in g.halves:
        names[(hr.dart, 0)] = names[(hr.dart, 1)] = f"{hr.name}_a"
    return names


def dual(g: Herg) -> tuple[Herg, DualWitness]:
    """The dual Herg and the face/edge/half-ribbon correspondences.

    Dual vertices are named ``f1``, ``f2``, ... in boundary-walk order; bare
    vertices are their own duals and keep their names.
    """
    g.require_valid("dual")
    ss = side_system(g)
    names = _dart_names(g, ss.seam)
    taken = set(ss.bare) | {"f"}

    def owner(side: Side) -> tuple[str, str]:
        d = side[0]
        if d in g.edge_of:
            return "edge", g.edge_of[d].name
        return "half", g.half_of[d].name

    def vertex_names(cycles: list[list[Side]]) -> list[str]:
        return [fresh_name("f", taken) for _ in cycles]

    gd, cycles = assemble(
        ss.corner,
        ss.seam,
        ss.hinge,
        dart_name=names.__getitem__,
        owner=owner,
        vertex_names=vertex_names,
        bare=ss.bare,
        start_key=lambda s: s,
    )
    face_to_vertex = {i: gd.vertex_of[names[cycle[0]]] for i, cycle in enumerate(cycles)}
    for j, name in enumerate(ss.bare):
        face_to_vertex[len(cycles) + j] = name
    witness = DualWitness(
        face_to_vertex=face_to_vertex,
        edge_to_edge={ed.name: ed.name for ed in g.edges},
        hr_to_hr={hr.name: hr.name for hr in g.halves},
    )
    logger.debug("dual: %d faces -> %d vertices", len(cycles) + len(ss.bare), gd.v)
    return gd, witness
