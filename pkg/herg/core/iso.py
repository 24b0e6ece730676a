"""Isomorphism and canonical forms of Hergs modulo relabeling and vertex flips.

A Herg is read as its side system, so relabeling is invisible and flipping a
vertex only exchanges the left and right sides of its darts. Each connected
component is labelled by a breadth-first walk from a start side; the smallest
code over admissible starts is the component's canonical code.

A component with two or more vertices is compared over all of its sides, so
flips of its vertices never separate two graphs. An orientable one-vertex
component keeps the orientation it is stored in: flipping its only vertex is
a reflection, and without ``allow_reflection`` a chiral one-vertex component
is not isomorphic to its flip. With ``allow_reflection`` the whole graph may
also be replaced by its mirror image.
"""

from __future__ import annotations

import hashlib
import logging

from herg.core.gem import LEFT, Side, SideSystem, side_system
from herg.core.model import Herg, VertexRecord

logger = logging.getLogger(__name__)

Code = tuple[tuple[int, int, int], ...]


def _walk(ss: SideSystem, start: Side) -> tuple[Code, list[Side]]:
    index = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        s = order[i]
        for f in (ss.corner, ss.hinge, ss.seam):
            t = f[s]
            if t not in index:
                index[t] = len(order)
                order.append(t)
        i += 1
    code = tuple(
        (index[ss.corner[s]], index[ss.hinge[s]], index[ss.seam[s]]) for s in order
    )
    return code, order


def _components(ss: SideSystem) -> list[list[Side]]:
    seen: set[Side] = set()
    comps = []
    for s in ss.sides:
        if s in seen:
            continue
        _, order = _walk(ss, s)
        seen.update(order)
        comps.append(order)
    return comps


def _starts(ss: SideSystem, comp: list[Side]) -> list[Side]:
    """Start sides compatible with the component's stored orientation.

    Only an orientable one-vertex component is restricted, to its left sides.
    Around a single vertex corner and hinge fix the 2-colouring by side, so
    the component is orientable iff every seam swaps left and right.
    """
    start = comp[0]
    around = {start[0]}
    t = ss.corner[ss.hinge[start]]
    while t != start:
        around.add(t[0])
        t = ss.corner[ss.hinge[t]]
    if around != {s[0] for s in comp}:
        return comp
    if any(ss.seam[s][1] == s[1] for s in comp):
        return comp
    return [s for s in comp if s[1] == LEFT]


def _component_codes(ss: SideSystem) -> list[tuple[Code, list[Side]]]:
    found = []
    for comp in _components(ss):
        best = min((_walk(ss, s) for s in _starts(ss, comp)), key=lambda w: w[0])
        found.append(best)
    return found


def mirror(g: Herg) -> Herg:
    """Every vertex flipped at once: rotations reversed, twists unchanged."""
    vertices = tuple(
        VertexRecord(vx.name, tuple(reversed(vx.rotation))) for vx in g.vertices
    )
    return Herg(vertices, g.edges, g.halves)


def _oriented_form(g: Herg) -> tuple:
    ss = side_system(g)
    codes = sorted(code for code, _ in _component_codes(ss))
    return (len(ss.bare), tuple(codes))


def canonical_form(g: Herg, allow_reflection: bool = True) -> tuple:
    form = _oriented_form(g)
    if allow_reflection:
        form = min(form, _oriented_form(mirror(g)))
    return form


def canonical_key(g: Herg, allow_reflection: bool = True) -> str:
    """Short stable digest of :func:`canonical_form`."""
    form = repr(canonical_form(g, allow_reflection)).encode()
    return hashlib.sha1(form).hexdigest()[:16]


def _match(g1: Herg, g2: Herg) -> dict[str, str] | None:
    ss1, ss2 = side_system(g1), side_system(g2)
    if len(ss1.bare) != len(ss2.bare):
        return None
    pool: dict[Code, list[list[Side]]] = {}
    for code, order in _component_codes(ss2):
        pool.setdefault(code, []).append(order)
    mapping: dict[str, str] = {}
    for code, order in _component_codes(ss1):
        matches = pool.get(code)
        if not matches:
            logger.debug("no component of the second graph matches code of length %d", len(code))
            return None
        target = matches.pop()
        for s, t in zip(order, target, strict=True):
            mapping[s[0]] = t[0]
    return mapping


def isomorphic(
    g1: Herg, g2: Herg, allow_reflection: bool = False
) -> dict[str, str] | None:
    """A dart bijection realizing ``g1 ≅ g2``, or ``None``."""
    if (g1.v, g1.e, g1.h) != (g2.v, g2.e, g2.h):
        return None
    mapping = _match(g1, g2)
    if mapping is None and allow_reflection:
        # the mirror keeps dart names
        mapping = _match(g1, mirror(g2))
    return mapping
