"""The ``herg 1`` text format.

::

    herg 1
    # comments run to end of line
    vertex u : d1 dh
    vertex v : d2
    edge e : d1 d2
    half h : dh

A vertex line lists its darts in rotation order; ``twisted`` after an edge's
darts marks a twisted edge.
"""

from __future__ import annotations

import logging
from pathlib import Path

from herg.core.model import TOKEN, EdgeRecord, HalfRibbonRecord, Herg, VertexRecord, validate
from herg.errors import HergSyntaxError

logger = logging.getLogger(__name__)

HEADER = "herg 1"


def _tokens(raw: str) -> list[str]:
    return raw.split("#", 1)[0].replace(":", " : ").split()


def _check_tokens(lineno: int, tokens: list[str]) -> None:
    for tok in tokens:
        if not TOKEN.match(tok):
            raise HergSyntaxError(lineno, f"bad token {tok!r}; expected [A-Za-z0-9_]+")


def parse(text: str) -> Herg:
    """Parse a Herg, raising ``HergSyntaxError`` with the offending line."""
    vertices: list[VertexRecord] = []
    edges: list[EdgeRecord] = []
    halves: list[HalfRibbonRecord] = []
    where: dict[str, int] = {}
    header_seen = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw)
        if not tokens:
            continue
        if not header_seen:
            if tokens != HEADER.split():
                raise HergSyntaxError(lineno, f"expected header {HEADER!r}")
            header_seen = True
            continue
        if len(tokens) < 3 or tokens[2] != ":":
            raise HergSyntaxError(lineno, "expected 'KIND NAME : ...'")
        kind, name, rest = tokens[0], tokens[1], tokens[3:]
        _check_tokens(lineno, [name, *rest])
        where.setdefault(name, lineno)
        if kind == "vertex":
            vertices.append(VertexRecord(name, tuple(rest)))
            for d in rest:
                where.setdefault(d, lineno)
        elif kind == "edge":
            twisted = len(rest) == 3 and rest[2] == "twisted"
            if len(rest) != 2 and not twisted:
                raise HergSyntaxError(lineno, "edge needs two darts and an optional 'twisted'")
            edges.append(EdgeRecord(name, (rest[0], rest[1]), twisted))
        elif kind == "half":
            if len(rest) != 1:
                raise HergSyntaxError(lineno, "half needs exactly one dart")
            halves.append(HalfRibbonRecord(name, rest[0]))
        else:
            raise HergSyntaxError(lineno, f"unknown record kind {kind!r}")

    if not header_seen:
        raise HergSyntaxError(1, f"missing header {HEADER!r}")

    g = Herg(tuple(vertices), tuple(edges), tuple(halves))
    report = validate(g)
    if not report.ok:
        first = report.violations[0]
        lineno = min((where[s] for s in first.subjects if s in where), default=1)
        raise HergSyntaxError(lineno, first.message)
    return g


def serialize(g: Herg) -> str:
    lines = [HEADER]
    for vx in g.vertices:
        lines.append(" ".join(["vertex", vx.name, ":", *vx.rotation]))
    for ed in g.edges:
        lines.append(
            " ".join(["edge", ed.name, ":", *ed.darts, *(["twisted"] if ed.twisted else [])])
        )
    for hr in g.halves:
        lines.append(f"half {hr.name} : {hr.dart}")
    return "\n".join(lines) + "\n"


def read_herg(path: str | Path) -> Herg:
    logger.debug("reading %s", path)
    return parse(Path(path).read_text(encoding="utf-8"))


def write_herg(g: Herg, path: str | Path) -> None:
    Path(path).write_text(serialize(g), encoding="utf-8")
