"""State-sum and recursive evaluation of the Herg polynomial invariants."""

from __future__ import annotations

import enum
import logging

from herg.config import config
from herg.core.gem import faces, side_system
from herg.core.iso import canonical_key
from herg.core.model import Herg
from herg.core.ops import underlying
from herg.edit.operations import contract_edge, cut_edge, delete_edge
from herg.edit.subgraphs import (
    Mode,
    check_state_budget,
    enumerate_subgraphs,
    spanning_subgraph,
    subgraph_stats,
)
from herg.poly.polynomial import ABVARS, RVARS, Poly, QuotientPoly
from herg.topology.invariants import components, is_bridge, orientable, rank_nullity
from herg.utils.typing import SubgraphStats

logger = logging.getLogger(__name__)

BRVARS: tuple[str, ...] = ("xm1", "y", "z", "w")


class InvariantKind(str, enum.Enum):
    RCUT = "RCut"
    RSPAN = "RSpan"
    PSPAN = "PSpan"
    PCUT = "PCut"
    M = "M"


def _r_term(rank: int, st: SubgraphStats) -> tuple[int, ...]:
    return (
        rank - st.r,
        st.n,
        st.k - st.f_int + st.n,
        st.c_ext,
        st.o,
        st.hcount,
    )


def _r_sum(g: Herg, mode: Mode) -> Poly:
    rank, _ = rank_nullity(g)
    terms: dict[tuple[int, ...], int] = {}
    for _, st in enumerate_subgraphs(g, mode):
        k = _r_term(rank, st)
        terms[k] = terms.get(k, 0) + 1
    return Poly(RVARS, terms).normalize()


def _p_sum(g: Herg, mode: Mode) -> Poly:
    terms: dict[tuple[int, ...], int] = {}
    for _, st in enumerate_subgraphs(g, mode):
        k = (st.f_int, st.c_ext)
        terms[k] = terms.get(k, 0) + 1
    return Poly(ABVARS, terms)


def pcut_raw(g: Herg) -> Poly:
    """𝒫 before reduction modulo b^2 - ab."""
    return _p_sum(g, "cut")


def m_polynomial(g: Herg) -> Poly:
    """Contributions of ``G`` and of ``G`` with every edge cut, counted once if equal."""
    g.require_valid("M")
    specials = {g, spanning_subgraph(g, (), "cut")}
    terms: dict[tuple[int, ...], int] = {}
    for sub in specials:
        st = subgraph_stats(sub)
        k = (st.f_int, st.c_ext)
        terms[k] = terms.get(k, 0) + 1
    return Poly(ABVARS, terms)


def invariant(g: Herg, kind: InvariantKind | str) -> Poly:
    kind = InvariantKind(kind)
    logger.debug("evaluating %s on v=%d e=%d |H|=%d", kind.value, g.v, g.e, g.h)
    if kind is InvariantKind.RCUT:
        return _r_sum(g, "cut")
    if kind is InvariantKind.RSPAN:
        return _r_sum(g, "delete")
    if kind is InvariantKind.PSPAN:
        return _p_sum(g, "delete")
    if kind is InvariantKind.PCUT:
        return QuotientPoly.of(pcut_raw(g))
    return m_polynomial(g)


def ordinary_edge(g: Herg) -> str | None:
    """First edge by label that is neither a loop nor a bridge."""
    for ed in g.edges:
        if not g.is_loop(ed.name) and not is_bridge(g, ed.name):
            return ed.name
    return None


def _recursive(
    g: Herg, kind: InvariantKind, memo: dict[str, Poly] | None
) -> Poly:
    key = canonical_key(g) if memo is not None else ""
    if memo is not None and key in memo:
        return memo[key]
    name = ordinary_edge(g)
    if name is None:
        result = invariant(g, kind)
    else:
        other = cut_edge(g, name) if kind is InvariantKind.RCUT else delete_edge(g, name)
        result = _recursive(other, kind, memo) + _recursive(
            contract_edge(g, name), kind, memo
        )
        logger.debug("%s recursion on %s", kind.value, name)
    if memo is not None:
        memo[key] = result
    return result


def recursive_rcut(g: Herg, memoize: bool | None = None) -> Poly:
    """ℛ by the cut/contract recurrence on ordinary edges, state sums on the rest."""
    g.require_valid("recursive_rcut")
    check_state_budget(g)
    memo = {} if (config.memoize if memoize is None else memoize) else None
    return _recursive(g, InvariantKind.RCUT, memo)


def recursive_rspan(g: Herg, memoize: bool | None = None) -> Poly:
    g.require_valid("recursive_rspan")
    check_state_budget(g)
    memo = {} if (config.memoize if memoize is None else memoize) else None
    return _recursive(g, InvariantKind.RSPAN, memo)


def br_polynomial(g: Herg) -> Poly:
    """Classical Bollobás–Riordan state sum of the underlying ribbon graph.

    Variables ``(xm1, y, z, w)``; boundary components are counted directly on
    each spanning subgraph, with a bare vertex bounding one.
    """
    ribbon = underlying(g)
    check_state_budget(ribbon)
    rank, _ = rank_nullity(ribbon)
    labels = [ed.name for ed in ribbon.edges]
    terms: dict[tuple[int, ...], int] = {}
    for mask in range(2 ** len(labels)):
        kept = [x for j, x in enumerate(labels) if mask >> j & 1]
        sub = spanning_subgraph(ribbon, kept, "delete")
        ss = side_system(sub)
        boundary = len(faces(ss)) + len(ss.bare)
        k, _ = components(sub)
        r = sub.v - k
        n = sub.e - r
        exps = (rank - r, n, k - boundary + n, 0 if orientable(sub) else 1)
        terms[exps] = terms.get(exps, 0) + 1
    return Poly(BRVARS, terms)
