"""Side systems: the boundary-walk machinery behind faces, duals and contraction.

Each dart attachment segment has a left and a right side. Three involutions act
on the sides:

* ``corner`` joins the right side of a dart to the left side of its rotation
  successor (the vertex arcs);
* ``hinge`` joins the two sides of the same dart (crossing the vertex disc);
* ``seam`` joins the sides of an edge's two darts, opposite sides when the edge
  is untwisted and same sides when twisted; for a half-ribbon it joins the two
  sides of its own dart, along the external segment.

Vertices are the orbits of ``<corner, hinge>``, boundary components the orbits
of ``<corner, seam>``. Swapping ``hinge`` and ``seam`` gives the dual.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from herg.core.model import EdgeRecord, HalfRibbonRecord, Herg, VertexRecord

Side = tuple[str, int]
LEFT, RIGHT = 0, 1


def side_label(side: Side) -> str:
    return f"{side[0]}.{'L' if side[1] == LEFT else 'R'}"


@dataclass(frozen=True)
class SideSystem:
    corner: dict[Side, Side]
    hinge: dict[Side, Side]
    seam: dict[Side, Side]
    # sides of half-ribbon darts; their seam step crosses an external segment
    open_sides: frozenset[Side]
    bare: tuple[str, ...]

    @property
    def sides(self) -> list[Side]:
        return sorted(self.corner)


def side_system(g: Herg) -> SideSystem:
    corner: dict[Side, Side] = {}
    hinge: dict[Side, Side] = {}
    seam: dict[Side, Side] = {}
    for vx in g.vertices:
        rot = vx.rotation
        for i, d in enumerate(rot):
            nxt = rot[(i + 1) % len(rot)]
            corner[(d, RIGHT)] = (nxt, LEFT)
            corner[(nxt, LEFT)] = (d, RIGHT)
            hinge[(d, LEFT)] = (d, RIGHT)
            hinge[(d, RIGHT)] = (d, LEFT)
    for ed in g.edges:
        a, b = ed.darts
        if ed.twisted:
            pairs = (((a, LEFT), (b, LEFT)), ((a, RIGHT), (b, RIGHT)))
        else:
            pairs = (((a, LEFT), (b, RIGHT)), ((a, RIGHT), (b, LEFT)))
        for x, y in pairs:
            seam[x] = y
            seam[y] = x
    open_sides = set()
    for hr in g.halves:
        x, y = (hr.dart, LEFT), (hr.dart, RIGHT)
        seam[x], seam[y] = y, x
        open_sides.update((x, y))
    bare = tuple(vx.name for vx in g.vertices if not vx.rotation)
    return SideSystem(corner, hinge, seam, frozenset(open_sides), bare)


def orbits(
    sides: Iterable[Side],
    first: dict[Side, Side],
    second: dict[Side, Side],
) -> list[list[Side]]:
    """Cycles of the group generated by two involutions, alternating first/second.

    Each cycle starts at its smallest side (in the iteration order given) and
    steps with ``first``, so the ``first``-pairs sit at even positions.
    """
    seen: set[Side] = set()
    found = []
    for start in sides:
        if start in seen:
            continue
        cycle = []
        s = start
        while True:
            cycle.append(s)
            t = first[s]
            cycle.append(t)
            s = second[t]
            if s == start:
                break
        seen.update(cycle)
        found.append(cycle)
    return found


def faces(ss: SideSystem) -> list[list[Side]]:
    return orbits(ss.sides, ss.seam, ss.corner)


def rewire(
    corner: dict[Side, Side], removed: set[Side], through: dict[Side, Side]
) -> dict[Side, Side]:
    """Drop ``removed`` sides, reconnecting corners along ``through`` paths.

    Deleting an edge reroutes through ``hinge``; contracting it through ``seam``.
    """
    out: dict[Side, Side] = {}
    for x, y in corner.items():
        if x in removed:
            continue
        while y in removed:
            y = corner[through[y]]
        out[x] = y
    return out


def assemble(
    corner: dict[Side, Side],
    hinge: dict[Side, Side],
    seam: dict[Side, Side],
    dart_name: Callable[[Side], str],
    owner: Callable[[Side], tuple[str, str]],
    vertex_names: Callable[[list[list[Side]]], list[str]],
    bare: Iterable[str] = (),
    start_key: Callable[[Side], tuple] | None = None,
) -> tuple[Herg, list[list[Side]]]:
    """Read a Herg back out of involutions on sides.

    ``owner(side)`` returns ``("edge" | "half", name)``. Each vertex orbit is
    walked from its smallest side under ``start_key``, which becomes a left
    side; twist bits follow from the resulting side labels. Returns the Herg
    and the vertex orbits in vertex order.
    """
    key = start_key or (lambda s: (s[1], s[0]))
    ordered = sorted(corner, key=key)
    cycles = orbits(ordered, hinge, corner)
    names = vertex_names(cycles)
    label: dict[Side, int] = {}
    vertices = []
    for name, cycle in zip(names, cycles, strict=True):
        rotation = []
        for i in range(0, len(cycle), 2):
            label[cycle[i]] = LEFT
            label[cycle[i + 1]] = RIGHT
            rotation.append(dart_name(cycle[i]))
        vertices.append(VertexRecord(name, tuple(rotation)))
    vertices.extend(VertexRecord(name) for name in bare)

    grouped: dict[tuple[str, str], list[Side]] = {}
    for s in ordered:
        grouped.setdefault(owner(s), []).append(s)
    edges, halves = [], []
    for (kind, name), sides in grouped.items():
        if kind == "half":
            halves.append(HalfRibbonRecord(name, dart_name(sides[0])))
            continue
        s = sides[0]
        twisted = label[s] == label[seam[s]]
        ends = sorted({dart_name(x) for x in sides})
        # first dart keeps the end that carries the smallest side
        first = dart_name(s)
        second = ends[1] if ends[0] == first else ends[0]
        edges.append(EdgeRecord(name, (first, second), twisted))
    return Herg(tuple(vertices), tuple(edges), tuple(halves)), cycles


def fresh_name(base: str, taken: set[str]) -> str:
    """``base`` if free, else ``base1``, ``base2``, ... ; records the choice."""
    if base not in taken:
        taken.add(base)
        return base
    n = 1
    while f"{base}{n}" in taken:
        n += 1
    taken.add(f"{base}{n}")
    return f"{base}{n}"
