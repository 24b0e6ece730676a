import pytest

from herg.cli.fileformat import serialize
from herg.cli.generator import corpus, gen
from herg.core.iso import canonical_key
from herg.core.model import validate
from herg.errors import GenerationError


def test_deterministic():
    assert serialize(gen(3, 4, 2, 5, True)) == serialize(gen(3, 4, 2, 5, True))


def test_counts_and_names():
    g = gen(3, 4, 2, 5, allow_twists=True)
    assert validate(g).ok
    assert (g.v, g.e, g.h) == (3, 4, 2)
    assert [vx.name for vx in g.vertices] == ["v1", "v2", "v3"]
    assert [ed.name for ed in g.edges] == ["e1", "e2", "e3", "e4"]
    assert sorted(g.darts, key=lambda d: int(d[1:])) == [f"d{i}" for i in range(1, 11)]


def test_half_ribbons_only():
    g = gen(1, 0, 3, 1)
    assert validate(g).ok
    assert [hr.name for hr in g.halves] == ["h1", "h2", "h3"]
    assert sorted(g.vertex["v1"].rotation) == ["d1", "d2", "d3"]


def test_no_twists_by_default():
    assert not any(ed.twisted for ed in gen(2, 6, 0, 11).edges)


@pytest.mark.parametrize("args", [(0, 1, 0), (0, 0, 1), (-1, 0, 0), (1, -1, 0)])
def test_impossible_requests(args):
    with pytest.raises(GenerationError):
        gen(*args, seed=0)


def test_corpus():
    items = list(corpus(max_edges=1, seed=3, seeds_per_cell=1))
    labels = [label for label, _ in items]
    keys = [canonical_key(g) for _, g in items]
    assert len(set(labels)) == len(labels)
    assert len(set(keys)) == len(keys)
    assert all(validate(g).ok for _, g in items)
    assert labels[0] == "v1-e0-h0-0"
    assert [lbl for lbl, _ in corpus(max_edges=1, seed=3, seeds_per_cell=1)] == labels
