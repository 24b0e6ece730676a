"""Named verification suites for ``herg verify``."""

from __future__ import annotations

import enum
import logging

from herg.cli.fileformat import parse, serialize
from herg.core.iso import isomorphic
from herg.core.model import Herg
from herg.core.ops import complete, completion_leaves, prune
from herg.duality.checks import check_correspondences, double_dual_check, dual_operation_checks
from herg.duality.dual import dual
from herg.poly.identities import (
    bridge_checks,
    duality_identity_checks,
    one_vertex_checks,
    recurrence_checks,
)
from herg.topology.checks import euler_checks
from herg.utils.typing import IdentityResult, VerifyReport

logger = logging.getLogger(__name__)


class VerifySuite(str, enum.Enum):
    EULER = "euler"
    DUALITY = "duality"
    RECURRENCE = "recurrence"
    DUAL_OPS = "dual-ops"
    DOUBLE_DUAL = "double-dual"
    BRIDGES = "bridges"
    ONE_VERTEX = "one-vertex"
    STRUCTURAL = "structural"
    ALL = "all"


def _flag(suite: str, name: str, ok: bool, detail: str = "") -> IdentityResult:
    return IdentityResult(
        suite=suite, name=name, status="PASS" if ok else "FAIL", detail="" if ok else detail
    )


def structural_checks(g: Herg) -> list[IdentityResult]:
    completed = complete(g)
    restored = prune(completed, completion_leaves(g, completed))
    return [
        _flag(
            "structural",
            "prune(complete(G)) ~ G",
            isomorphic(restored, g) is not None,
            "not isomorphic",
        ),
        _flag("structural", "parse(serialize(G)) = G", parse(serialize(g)) == g, "records differ"),
    ]


def _duality(g: Herg) -> list[IdentityResult]:
    gd, _ = dual(g)
    return check_correspondences(g, gd).results + duality_identity_checks(g, gd)


def _double_dual(g: Herg) -> list[IdentityResult]:
    return [_flag("double-dual", "G** ~ G", double_dual_check(g), "not isomorphic")]


RUNNERS = {
    VerifySuite.EULER: euler_checks,
    VerifySuite.DUALITY: _duality,
    VerifySuite.RECURRENCE: recurrence_checks,
    VerifySuite.DUAL_OPS: dual_operation_checks,
    VerifySuite.DOUBLE_DUAL: _double_dual,
    VerifySuite.BRIDGES: bridge_checks,
    VerifySuite.ONE_VERTEX: one_vertex_checks,
    VerifySuite.STRUCTURAL: structural_checks,
}


def run_suite(g: Herg, suite: VerifySuite | str, label: str = "") -> VerifyReport:
    suite = VerifySuite(suite)
    g.require_valid("verify")
    chosen = list(RUNNERS) if suite is VerifySuite.ALL else [suite]
    results: list[IdentityResult] = []
    for name in chosen:
        logger.debug("suite %s on %s", name.value, label or "graph")
        results.extend(RUNNERS[name](g))
    return VerifyReport(graph=label, results=results)
