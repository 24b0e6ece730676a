"""Euler-characteristic and face-count checks run by ``herg verify --suite euler``."""

from __future__ import annotations

from herg.core.model import Herg
from herg.core.ops import complete, underlying
from herg.topology.faces import trace_boundary
from herg.topology.invariants import completed_euler, euler_genus, orientable
from herg.utils.typing import IdentityResult

SUITE = "euler"


def _result(name: str, left: object, right: object) -> IdentityResult:
    ok = left == right
    return IdentityResult(
        suite=SUITE,
        name=name,
        status="PASS" if ok else "FAIL",
        detail="" if ok else f"{left} != {right}",
    )


def euler_checks(g: Herg) -> list[IdentityResult]:
    report = trace_boundary(g)
    euler = euler_genus(g, report)
    sides = sum(len(o.sides) for o in report.orbits)
    closure = trace_boundary(underlying(complete(g)))
    return [
        _result("f_ext = |H|", report.f_ext, g.h),
        _result("gamma even when orientable", not orientable(g) or euler.gamma % 2 == 0, True),
        _result("orbits cover every side", sides, 4 * g.e + 2 * g.h),
        _result("f_int(closure) = f_int + C_ext", closure.f_int, report.f_int + report.c_ext),
        _result("chi(completion) = chi", completed_euler(g), euler.chi),
        _result("chi(underlying) = chi", euler_genus(underlying(g)).chi, euler.chi),
        _result("gamma >= 0", euler.gamma >= 0, True),
    ]
