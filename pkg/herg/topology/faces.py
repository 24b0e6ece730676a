"""Boundary tracing: closed faces, open faces and external cycles."""

from __future__ import annotations

from herg.core.gem import SideSystem, faces, side_label, side_system
from herg.core.model import Herg
from herg.utils.typing import FaceReport, Orbit


def report_from_sides(g: Herg, ss: SideSystem) -> FaceReport:
    orbits = []
    for cycle in faces(ss):
        # seam steps sit at even positions; each half-ribbon is crossed once
        at = [i for i in range(0, len(cycle), 2) if cycle[i] in ss.open_sides]
        orbits.append(
            Orbit(
                sides=[side_label(s) for s in cycle],
                crossings=[g.half_of[cycle[i][0]].name for i in at],
                crossing_at=at,
            )
        )
    closed = sum(1 for o in orbits if o.closed)
    # an isolated bare vertex bounds one closed face of length zero
    return FaceReport(
        orbits=orbits,
        bare=len(ss.bare),
        f_int=closed + len(ss.bare),
        f_ext=sum(len(o.crossings) for o in orbits),
        c_ext=len(orbits) - closed,
    )


def trace_boundary(g: Herg) -> FaceReport:
    g.require_valid("trace_boundary")
    return report_from_sides(g, side_system(g))
