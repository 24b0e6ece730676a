"""Spanning and spanning-cutting subgraphs and their state-sum statistics."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from typing import Literal

from herg.config import config
from herg.core.gem import fresh_name, side_system
from herg.core.model import HalfRibbonRecord, Herg, VertexRecord
from herg.errors import StateSumTooLarge, UnknownEdgeError
from herg.topology.faces import report_from_sides
from herg.topology.invariants import orientable, rank_nullity
from herg.utils.typing import SubgraphSelector, SubgraphStats

logger = logging.getLogger(__name__)

Mode = Literal["delete", "cut"]


def spanning_subgraph(g: Herg, kept: Iterable[str], mode: Mode) -> Herg:
    """All vertices, the ``kept`` edges, and the rest deleted or cut."""
    kept = set(kept)
    unknown = kept - set(g.edge)
    if unknown:
        raise UnknownEdgeError(sorted(unknown)[0])
    dropped = [ed for ed in g.edges if ed.name not in kept]
    edges = tuple(ed for ed in g.edges if ed.name in kept)
    if mode == "cut":
        taken = g.taken_names()
        halves = list(g.halves)
        for ed in dropped:
            taken.add(f"{ed.name}_h")
            for d in ed.darts:
                halves.append(HalfRibbonRecord(fresh_name(f"{ed.name}_h", taken), d))
        return Herg(g.vertices, edges, tuple(halves))
    gone = {d for ed in dropped for d in ed.darts}
    vertices = tuple(
        VertexRecord(vx.name, tuple(d for d in vx.rotation if d not in gone))
        for vx in g.vertices
    )
    return Herg(vertices, edges, g.halves)


def subgraph_stats(h: Herg) -> SubgraphStats:
    r, n = rank_nullity(h)
    report = report_from_sides(h, side_system(h))
    return SubgraphStats(
        r=r,
        n=n,
        k=h.v - r,
        f_int=report.f_int,
        c_ext=report.c_ext,
        o=0 if orientable(h) else 1,
        hcount=h.h,
    )


def check_state_budget(g: Herg) -> None:
    if g.e > config.max_state_edges:
        raise StateSumTooLarge(g.e, config.max_state_edges)


def enumerate_subgraphs(
    g: Herg, mode: Mode
) -> Iterator[tuple[SubgraphSelector, SubgraphStats]]:
    """Every kept-edge subset in binary-counter order; bit j keeps edge j by label."""
    g.require_valid("enumerate_subgraphs")
    check_state_budget(g)
    labels = [ed.name for ed in g.edges]
    logger.debug("enumerating %d %s subgraphs", 2 ** len(labels), mode)
    for mask in range(2 ** len(labels)):
        kept = frozenset(x for j, x in enumerate(labels) if mask >> j & 1)
        sub = spanning_subgraph(g, kept, mode)
        yield SubgraphSelector(kept=kept, mode=mode), subgraph_stats(sub)
