"""The Herg value type: a rotation-twist system with unpaired half-ribbon darts."""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from herg.errors import InvalidHergError
from herg.utils.typing import ValidationReport, Violation

TOKEN = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class VertexRecord:
    name: str
    # Counterclockwise order of dart attachments; the first follows the last.
    rotation: tuple[str, ...] = ()


@dataclass(frozen=True)
class EdgeRecord:
    name: str
    darts: tuple[str, str]
    twisted: bool = False


@dataclass(frozen=True)
class HalfRibbonRecord:
    name: str
    dart: str


@dataclass(frozen=True)
class Herg:
    """A half-edge ribbon graph.

    Records are kept sorted by name, so two Hergs built from the same records
    in any order compare equal.
    """

    vertices: tuple[VertexRecord, ...] = ()
    edges: tuple[EdgeRecord, ...] = ()
    halves: tuple[HalfRibbonRecord, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertices", tuple(sorted(self.vertices, key=lambda r: r.name))
        )
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda r: r.name)))
        object.__setattr__(
            self, "halves", tuple(sorted(self.halves, key=lambda r: r.name))
        )

    @classmethod
    def of(
        cls,
        vertices: Mapping[str, Iterable[str]],
        edges: Mapping[str, tuple[str, str] | tuple[str, str, bool]] | None = None,
        halves: Mapping[str, str] | None = None,
    ) -> Herg:
        """Build a Herg from plain mappings.

        ``edges`` maps a name to ``(dart, dart)`` or ``(dart, dart, twisted)``.
        """
        edge_records = []
        for name, darts in (edges or {}).items():
            twisted = bool(darts[2]) if len(darts) > 2 else False  # type: ignore[misc]
            edge_records.append(EdgeRecord(name, (darts[0], darts[1]), twisted))
        return cls(
            vertices=tuple(VertexRecord(n, tuple(r)) for n, r in vertices.items()),
            edges=tuple(edge_records),
            halves=tuple(HalfRibbonRecord(n, d) for n, d in (halves or {}).items()),
        )

    # --- sizes -------------------------------------------------------------

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def h(self) -> int:
        return len(self.halves)

    # --- lookups -----------------------------------------------------------

    @cached_property
    def vertex_of(self) -> dict[str, str]:
        """Dart -> name of the vertex whose rotation holds it."""
        return {d: vx.name for vx in self.vertices for d in vx.rotation}

    @cached_property
    def edge_of(self) -> dict[str, EdgeRecord]:
        return {d: ed for ed in self.edges for d in ed.darts}

    @cached_property
    def half_of(self) -> dict[str, HalfRibbonRecord]:
        return {hr.dart: hr for hr in self.halves}

    @cached_property
    def vertex(self) -> dict[str, VertexRecord]:
        return {vx.name: vx for vx in self.vertices}

    @cached_property
    def edge(self) -> dict[str, EdgeRecord]:
        return {ed.name: ed for ed in self.edges}

    @cached_property
    def half(self) -> dict[str, HalfRibbonRecord]:
        return {hr.name: hr for hr in self.halves}

    @property
    def darts(self) -> list[str]:
        return [d for vx in self.vertices for d in vx.rotation]

    def partner(self, dart: str) -> str:
        a, b = self.edge_of[dart].darts
        return b if dart == a else a

    def is_loop(self, name: str) -> bool:
        a, b = self.edge[name].darts
        return self.vertex_of[a] == self.vertex_of[b]

    def halves_at(self, vertex: str) -> list[str]:
        return [self.half_of[d].name for d in self.vertex[vertex].rotation if d in self.half_of]

    def taken_names(self) -> set[str]:
        """Edge and half-ribbon names share one namespace."""
        return {ed.name for ed in self.edges} | {hr.name for hr in self.halves}

    def require_valid(self, context: str = "") -> None:
        report = validate(self)
        if not report.ok:
            raise InvalidHergError(report, context)


def validate(g: Herg) -> ValidationReport:
    """Check the dart partition and record-level rules."""
    found: list[Violation] = []

    def add(kind: str, message: str, *subjects: str) -> None:
        found.append(Violation(kind=kind, message=message, subjects=list(subjects)))

    for kind, names in (
        ("vertex", [vx.name for vx in g.vertices]),
        ("edge/half", [ed.name for ed in g.edges] + [hr.name for hr in g.halves]),
    ):
        for name, count in Counter(names).items():
            if count > 1:
                add("duplicate-name", f"duplicate {kind} name {name}", name)

    for token in (
        [vx.name for vx in g.vertices]
        + [ed.name for ed in g.edges]
        + [hr.name for hr in g.halves]
        + g.darts
    ):
        if not TOKEN.match(token):
            add("bad-token", f"token {token!r} is not [A-Za-z0-9_]+", token)

    homes: dict[str, list[str]] = {}
    for vx in g.vertices:
        for d in vx.rotation:
            homes.setdefault(d, []).append(vx.name)
    for d, where in homes.items():
        if len(where) > 1:
            add("duplicate-dart", f"duplicate dart {d} in rotations of {', '.join(where)}", d, *where)

    owners: dict[str, list[str]] = {}
    for ed in g.edges:
        if ed.darts[0] == ed.darts[1]:
            add("edge-darts", f"edge {ed.name} darts not distinct", ed.name)
            owners.setdefault(ed.darts[0], []).append(ed.name)
            continue
        for d in ed.darts:
            owners.setdefault(d, []).append(ed.name)
    for hr in g.halves:
        owners.setdefault(hr.dart, []).append(hr.name)
        where = homes.get(hr.dart, [])
        if len(where) > 1 and len(set(where)) == 1:
            add("half-loop", f"half-ribbon {hr.name} forms a loop", hr.name)

    for d, recs in owners.items():
        if len(recs) > 1:
            add("shared-dart", f"dart {d} in two records: {', '.join(recs)}", d, *recs)
        if d not in homes:
            add("dangling-dart", f"dart {d} of {recs[0]} lies in no rotation", d, *recs)
    for d, where in homes.items():
        if d not in owners:
            add("orphan-dart", f"orphan dart {d}", d, *where)

    return ValidationReport(violations=found)
