"""Checked identities relating the invariants of a Herg, its dual and its minors.

Every check returns an ``IdentityResult``; mathematical failures are reported,
never raised.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from herg.core.model import Herg
from herg.duality.dual import dual
from herg.edit.operations import contract_edge, cut_edge, delete_edge
from herg.edit.subgraphs import Mode, check_state_budget, spanning_subgraph
from herg.poly.invariants import (
    BRVARS,
    InvariantKind,
    br_polynomial,
    invariant,
    m_polynomial,
    pcut_raw,
    recursive_rcut,
    recursive_rspan,
)
from herg.poly.polynomial import (
    ABVARS,
    PARTIAL_VARS,
    RVARS,
    Poly,
    QuotientPoly,
    at_b,
    duality_subst,
    partial_subst,
    swap_ab,
)
from herg.topology.faces import trace_boundary
from herg.topology.invariants import classify, components, edge_class, is_bridge
from herg.utils.typing import EdgeClass, IdentityResult, VerifyReport

logger = logging.getLogger(__name__)

SUITES = ("one-vertex", "bridges", "duality", "recurrence")


def _compare(suite: str, name: str, left: Poly, right: Poly) -> IdentityResult:
    if left == right:
        return IdentityResult(suite=suite, name=name, status="PASS")
    logger.warning("%s: %s failed: %s != %s", suite, name, left, right)
    return IdentityResult(suite=suite, name=name, status="FAIL", detail=f"{left} != {right}")


def _skip(suite: str, name: str, why: str) -> IdentityResult:
    return IdentityResult(suite=suite, name=name, status="SKIP", detail=why)


def _ab(name: str) -> Poly:
    return Poly.var(ABVARS, name)


def _partial(name: str) -> Poly:
    return Poly.var(PARTIAL_VARS, name)


def one_vertex_checks(g: Herg) -> list[IdentityResult]:
    suite = "one-vertex"
    if g.v != 1:
        return [_skip(suite, "P = a*R(x,a,1/a,b,1,1)", "needs exactly one vertex")]
    a = _ab("a")
    rspan = partial_subst(invariant(g, InvariantKind.RSPAN)).recast(ABVARS)
    rcut = partial_subst(invariant(g, InvariantKind.RCUT)).recast(ABVARS)
    return [
        _compare(suite, "P = a*R(x,a,1/a,b,1,1)", invariant(g, InvariantKind.PSPAN), a * rspan),
        _compare(suite, "P_cut = a*R_cut(x,a,1/a,b,1,1)", pcut_raw(g), a * rcut),
    ]


def stable_branch(
    g: Herg, name: str, mode: Mode, branch: Callable[[EdgeClass], str]
) -> str | None:
    """The branch of bridge ``name`` if every spanning subgraph keeping it agrees."""
    others = [ed.name for ed in g.edges if ed.name != name]
    seen = set()
    for mask in range(2 ** len(others)):
        kept = {name} | {x for j, x in enumerate(others) if mask >> j & 1}
        seen.add(branch(edge_class(spanning_subgraph(g, kept, mode), name)))
        if len(seen) > 1:
            return None
    return seen.pop()


def _span_branch(kind: EdgeClass) -> str:
    return "external" if kind == "external" else "otherwise"


def _cut_branch(kind: EdgeClass) -> str:
    return "internal" if kind == "internal" else "otherwise"


def _explain(
    result: IdentityResult, g: Herg, name: str, mode: Mode, branch: Callable[[EdgeClass], str]
) -> IdentityResult:
    """Attach the branch seen across subgraphs to a failed bridge relation."""
    if result.status != "FAIL":
        return result
    stable = stable_branch(g, name, mode, branch)
    if stable is None:
        where = "spanning" if mode == "delete" else "cutting"
        note = f"branch varies across {where} subgraphs"
    else:
        note = f"stable branch {stable}"
    return result.model_copy(update={"detail": f"{result.detail}; {note}"})


def bridge_checks(g: Herg) -> list[IdentityResult]:
    """Bridge relations for P, R, P_cut and R_cut.

    The branch of each relation is read off the class of the bridge in ``g``.
    A failure records whether the branch is the same in every spanning
    (cutting) subgraph keeping the bridge.
    """
    suite = "bridges"
    found = classify(g)
    if not found.bridges:
        return [_skip(suite, "bridge relations", "no bridges")]
    check_state_budget(g)
    a, b = _ab("a"), _ab("b")
    xm1, pa, pb = _partial("xm1"), _partial("a"), _partial("b")
    results = []
    for name in found.bridges:
        minor = contract_edge(g, name)
        kind = found.edge_classes[name]

        span = _span_branch(kind)
        external = span == "external"
        r_factor = pa**-1 * pb * xm1 + 1 if external else xm1 + 1
        span_results = [
            _compare(
                suite,
                f"P bridge {name} ({span})",
                invariant(g, InvariantKind.PSPAN),
                (b + 1 if external else a + 1) * invariant(minor, InvariantKind.PSPAN),
            ),
            _compare(
                suite,
                f"R bridge {name} ({span})",
                partial_subst(invariant(g, InvariantKind.RSPAN)),
                r_factor * partial_subst(invariant(minor, InvariantKind.RSPAN)),
            ),
        ]
        results += [_explain(r, g, name, "delete", _span_branch) for r in span_results]

        cut = _cut_branch(kind)
        internal = cut == "internal"
        pc_factor = a**-1 * b * b + 1 if internal else b + 1
        rc_factor = pa**-2 * pb * pb * xm1 + 1 if internal else pa**-1 * pb * xm1 + 1
        cut_results = [
            _compare(
                suite,
                f"P_cut bridge {name} ({cut})",
                QuotientPoly.of(pcut_raw(g)),
                QuotientPoly.of(pc_factor * pcut_raw(minor)),
            ),
            _compare(
                suite,
                f"R_cut bridge {name} ({cut})",
                partial_subst(invariant(g, InvariantKind.RCUT)),
                rc_factor * partial_subst(invariant(minor, InvariantKind.RCUT)),
            ),
        ]
        results += [_explain(r, g, name, "cut", _cut_branch) for r in cut_results]
    return results


def _subst_rcut_minus_m(h: Herg) -> QuotientPoly:
    k, _ = components(h)
    a = _ab("a")
    return QuotientPoly.of(a**k * duality_subst(invariant(h, InvariantKind.RCUT)) - m_polynomial(h))


def duality_identity_checks(g: Herg, gd: Herg | None = None) -> list[IdentityResult]:
    suite = "duality"
    if gd is None:
        gd, _ = dual(g)
    c_ext = trace_boundary(g).c_ext
    results = [
        _compare(
            suite,
            "P = P*",
            invariant(g, InvariantKind.PSPAN),
            invariant(gd, InvariantKind.PSPAN),
        ),
        _compare(
            suite,
            "R(a+1,a,1/a,b,1,1) = R*(a+1,a,1/a,b,1,1)",
            duality_subst(invariant(g, InvariantKind.RSPAN)),
            duality_subst(invariant(gd, InvariantKind.RSPAN)),
        ),
    ]
    pcut, pcut_d = QuotientPoly.of(pcut_raw(g)), QuotientPoly.of(pcut_raw(gd))
    m, m_d = m_polynomial(g), m_polynomial(gd)
    if c_ext > 0:
        results += [
            _compare(suite, "P_cut(a,b) = P_cut(b,b)", pcut, QuotientPoly.of(at_b(pcut_raw(g)))),
            _compare(
                suite,
                "P_cut(a,b) = P(b,b)",
                pcut,
                QuotientPoly.of(at_b(invariant(g, InvariantKind.PSPAN))),
            ),
            _compare(
                suite,
                "R_cut(a+1,a,1/a,b,1,1) = R_cut*(a+1,a,1/a,b,1,1)",
                QuotientPoly.of(duality_subst(invariant(g, InvariantKind.RCUT))),
                QuotientPoly.of(duality_subst(invariant(gd, InvariantKind.RCUT))),
            ),
            _compare(suite, "M = M*", QuotientPoly.of(m), QuotientPoly.of(m_d)),
            _compare(suite, "P_cut = P_cut*", pcut, pcut_d),
        ]
        return results

    results += [
        _compare(
            suite,
            "a^k R_cut(a+1,a,1/a,b,1,1) - M = same for dual",
            _subst_rcut_minus_m(g),
            _subst_rcut_minus_m(gd),
        ),
        _compare(suite, "P_cut - M = P_cut* - M*", QuotientPoly.of(pcut - m), QuotientPoly.of(pcut_d - m_d)),
    ]
    if g.e == 0 or any(not vx.rotation for vx in g.vertices):
        results.append(_skip(suite, "M*(a,b) = M(b,a)", "needs edges and no isolated vertex"))
    else:
        results.append(_compare(suite, "M*(a,b) = M(b,a)", m_d, swap_ab(m)))
    return results


def recurrence_checks(g: Herg) -> list[IdentityResult]:
    suite = "recurrence"
    results = [
        _compare(suite, "R_cut state sum = recursion", invariant(g, InvariantKind.RCUT), recursive_rcut(g)),
        _compare(suite, "R state sum = recursion", invariant(g, InvariantKind.RSPAN), recursive_rspan(g)),
    ]
    for ed in g.edges:
        if g.is_loop(ed.name) or is_bridge(g, ed.name):
            continue
        contracted = contract_edge(g, ed.name)
        results += [
            _compare(
                suite,
                f"P = P/{ed.name} + P-{ed.name}",
                invariant(g, InvariantKind.PSPAN),
                invariant(contracted, InvariantKind.PSPAN)
                + invariant(delete_edge(g, ed.name), InvariantKind.PSPAN),
            ),
            _compare(
                suite,
                f"P_cut = P_cut/{ed.name} + P_cut v {ed.name}",
                pcut_raw(g),
                pcut_raw(contracted) + pcut_raw(cut_edge(g, ed.name)),
            ),
        ]
    if g.h:
        results.append(_skip(suite, "R(s=1,t=1) = BR", "has half-ribbons"))
        return results
    br = br_polynomial(g)
    z = Poly.var(RVARS, "z")
    to_br = {n: Poly.var(RVARS, n) for n in RVARS}
    results += [
        _compare(
            suite,
            "R(s=1,t=1) = BR",
            invariant(g, InvariantKind.RSPAN).subst({**to_br, "s": 1, "t": 1}, RVARS).recast(BRVARS),
            br,
        ),
        _compare(
            suite,
            "R_cut(s=1/z,t=1) = BR",
            invariant(g, InvariantKind.RCUT).subst({**to_br, "s": z**-1, "t": 1}, RVARS).recast(BRVARS),
            br,
        ),
    ]
    return results


CHECKS: dict[str, Callable[[Herg], list[IdentityResult]]] = {
    "one-vertex": one_vertex_checks,
    "bridges": bridge_checks,
    "duality": duality_identity_checks,
    "recurrence": recurrence_checks,
}


def verify_identities(g: Herg, suites: tuple[str, ...] = SUITES, label: str = "") -> VerifyReport:
    g.require_valid("verify_identities")
    results: list[IdentityResult] = []
    for suite in suites:
        logger.info("running %s identities on %s", suite, label or "graph")
        results.extend(CHECKS[suite](g))
    return VerifyReport(graph=label, results=results)
