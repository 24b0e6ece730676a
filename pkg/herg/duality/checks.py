"""Correspondences between a Herg and its dual."""

from __future__ import annotations

import logging

from herg.core.iso import isomorphic
from herg.core.model import Herg
from herg.duality.dual import dual
from herg.edit.operations import contract_edge, delete_edge
from herg.topology.faces import trace_boundary
from herg.topology.invariants import classify, euler_genus, orientable
from herg.utils.typing import CorrespondenceReport, IdentityResult

logger = logging.getLogger(__name__)


def _compare(suite: str, name: str, left: object, right: object) -> IdentityResult:
    if left == right:
        return IdentityResult(suite=suite, name=name, status="PASS")
    return IdentityResult(suite=suite, name=name, status="FAIL", detail=f"{left} != {right}")


def check_correspondences(g: Herg, gd: Herg) -> CorrespondenceReport:
    """Vertex/face counts, edges, half-ribbons, genus and orientability of ``g`` vs ``gd``."""
    faces, faces_d = trace_boundary(g), trace_boundary(gd)
    cls, cls_d = classify(g), classify(gd)
    pairs = [
        ("V_int = f_int*", cls.v_int, faces_d.f_int),
        ("f_int = V_int*", faces.f_int, cls_d.v_int),
        ("V_ext = C_ext*", cls.v_ext, faces_d.c_ext),
        ("C_ext = V_ext*", faces.c_ext, cls_d.v_ext),
        ("e = e*", g.e, gd.e),
        ("|H| = |H*|", g.h, gd.h),
        ("gamma = gamma*", euler_genus(g, faces).gamma, euler_genus(gd, faces_d).gamma),
        ("orientable = orientable*", orientable(g), orientable(gd)),
    ]
    results = [_compare("duality", name, left, right) for name, left, right in pairs]
    return CorrespondenceReport(results=results)


def double_dual_check(g: Herg) -> bool:
    gd, _ = dual(g)
    gdd, _ = dual(gd)
    return isomorphic(gdd, g, allow_reflection=True) is not None


def dual_operation_checks(g: Herg) -> list[IdentityResult]:
    """(G - e)* ≅ G*/e and (G/e)* ≅ G* - e for every edge, up to reflection."""
    gd, _ = dual(g)
    results = []
    for ed in g.edges:
        deleted_dual, _ = dual(delete_edge(g, ed.name))
        contracted_dual, _ = dual(contract_edge(g, ed.name))
        for name, left, right in (
            (f"(G-{ed.name})* ~ G*/{ed.name}", deleted_dual, contract_edge(gd, ed.name)),
            (f"(G/{ed.name})* ~ G*-{ed.name}", contracted_dual, delete_edge(gd, ed.name)),
        ):
            ok = isomorphic(left, right, allow_reflection=True) is not None
            if not ok:
                logger.warning("dual-ops failure: %s", name)
            results.append(
                IdentityResult(
                    suite="dual-ops",
                    name=name,
                    status="PASS" if ok else "FAIL",
                    detail="" if ok else "not isomorphic",
                )
            )
    return results
