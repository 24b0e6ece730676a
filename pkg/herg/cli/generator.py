"""Seeded random Hergs and the verify corpus.

Draws come from ``random.Random`` (Mersenne Twister MT19937) in a fixed order,
draw-order version 1:

1. for each edge ``e1, e2, ...``: a vertex for its first dart, a vertex for its
   second dart, then, only with twists allowed, ``random() < 0.5`` for the twist;
2. for each half-ribbon ``h1, h2, ...``: a vertex for its dart;
3. for each vertex ``v1, v2, ...`` in order: ``shuffle`` of its rotation.

Vertices are drawn with ``randrange(vertices)``. Darts are numbered ``d1, d2, ...``
in creation order.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator

from herg.config import config
from herg.core.iso import canonical_key
from herg.core.model import EdgeRecord, HalfRibbonRecord, Herg, VertexRecord
from herg.errors import GenerationError

logger = logging.getLogger(__name__)

DRAW_ORDER_VERSION = 1


def gen(
    vertices: int, edges: int, halves: int, seed: int, allow_twists: bool = False
) -> Herg:
    if min(vertices, edges, halves) < 0:
        raise GenerationError("counts must be non-negative")
    if vertices == 0 and (edges or halves):
        raise GenerationError("edges and half-ribbons need at least one vertex")
    rng = random.Random(seed)
    rotations: list[list[str]] = [[] for _ in range(vertices)]
    counter = 0

    def dart_at(vertex: int) -> str:
        nonlocal counter
        counter += 1
        name = f"d{counter}"
        rotations[vertex].append(name)
        return name

    edge_records = []
    for i in range(1, edges + 1):
        a = dart_at(rng.randrange(vertices))
        b = dart_at(rng.randrange(vertices))
        twisted = allow_twists and rng.random() < 0.5
        edge_records.append(EdgeRecord(f"e{i}", (a, b), twisted))
    half_records = [
        HalfRibbonRecord(f"h{i}", dart_at(rng.randrange(vertices)))
        for i in range(1, halves + 1)
    ]
    for rotation in rotations:
        rng.shuffle(rotation)
    vertex_records = tuple(
        VertexRecord(f"v{i + 1}", tuple(rot)) for i, rot in enumerate(rotations)
    )
    return Herg(vertex_records, tuple(edge_records), tuple(half_records))


def corpus(
    max_edges: int = 6, seed: int = 0, seeds_per_cell: int | None = None
) -> Iterator[tuple[str, Herg]]:
    """Labelled Hergs over v in 1..4, e in 0..max_edges, |H| in 0..3, twists off/on.

    Sub-seeds are drawn from one generator seeded with ``seed``; graphs equal up
    to isomorphism (reflections allowed) are yielded once.
    """
    per_cell = config.corpus_seeds if seeds_per_cell is None else seeds_per_cell
    master = random.Random(seed)
    seen: set[str] = set()
    drawn = 0
    for v in range(1, 5):
        for e in range(max_edges + 1):
            for h in range(4):
                for twists in (False, True):
                    for j in range(per_cell):
                        sub_seed = master.getrandbits(64)
                        drawn += 1
                        g = gen(v, e, h, sub_seed, twists)
                        key = canonical_key(g)
                        if key in seen:
                            continue
                        seen.add(key)
                        yield f"v{v}-e{e}-h{h}{'-tw' if twists else ''}-{j}", g
    logger.info("corpus: %d draws, %d distinct graphs", drawn, len(seen))
