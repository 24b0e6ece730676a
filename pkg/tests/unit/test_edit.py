import pytest

from herg.config import config
from herg.core import Herg, flip, isomorphic
from herg.edit import (
    contract_edge,
    cut_edge,
    delete_edge,
    enumerate_subgraphs,
    spanning_subgraph,
    subgraph_stats,
)
from herg.errors import StateSumTooLarge, UnknownEdgeError
from herg.topology import euler_genus, trace_boundary


def cyclic(rotation: tuple[str, ...]) -> tuple[str, ...]:
    i = rotation.index(min(rotation))
    return rotation[i:] + rotation[:i]


def test_delete(bridge, loop, g6):
    assert delete_edge(bridge, "e") == Herg.of({"u": [], "v": []})
    assert delete_edge(loop, "e") == Herg.of({"u": []})
    assert delete_edge(g6, "e") == Herg.of({"u": ["dh"], "v": []}, {}, {"h": "dh"})


def test_cut_loop(loop):
    assert cut_edge(loop, "e") == Herg.of({"u": ["d1", "d2"]}, {}, {"e_h1": "d1", "e_h2": "d2"})


def test_cut_names_avoid_collisions():
    g = Herg.of({"u": ["d1", "d2", "d3"]}, {"e": ("d1", "d2")}, {"e_h1": "d3"})
    assert set(cut_edge(g, "e").half) == {"e_h1", "e_h2", "e_h3"}


def test_cut_twisted_edge_keeps_rotations(twisted_loop):
    cut = cut_edge(twisted_loop, "e")
    assert cut.vertices == twisted_loop.vertices
    assert trace_boundary(cut).c_ext == 1


def test_unknown_edge(bridge):
    for op in (delete_edge, cut_edge, contract_edge):
        with pytest.raises(UnknownEdgeError):
            op(bridge, "nope")


def test_contract_bridge(bridge):
    assert contract_edge(bridge, "e") == Herg.of({"u": []})


def test_contract_trivial_loops(loop, twisted_loop):
    assert contract_edge(loop, "e") == Herg.of({"u": [], "u1": []})
    assert contract_edge(twisted_loop, "e") == Herg.of({"u": []})


def test_contract_splices_rotation():
    g = Herg.of(
        {"u": ["p", "a", "q"], "v": ["b", "b1", "b2"]},
        {"e": ("a", "b")},
        {"hp": "p", "hq": "q", "hb1": "b1", "hb2": "b2"},
    )
    merged = contract_edge(g, "e")
    assert merged.v == 1
    assert cyclic(merged.vertex["u"].rotation) == ("b1", "b2", "q", "p")


def test_contract_untwisted_loop_splits():
    g = Herg.of({"u": ["d1", "a1", "d2", "b1"]}, {"e": ("d1", "d2")}, {"ha": "a1", "hb": "b1"})
    split = contract_edge(g, "e")
    assert split == Herg.of({"u": ["a1"], "u1": ["b1"]}, {}, {"ha": "a1", "hb": "b1"})


def test_contract_twisted_loop_reverses_far_arc():
    g = Herg.of(
        {"u": ["d1", "a1", "a2", "d2", "b1", "b2"]},
        {"e": ("d1", "d2", True)},
        {"ha1": "a1", "ha2": "a2", "hb1": "b1", "hb2": "b2"},
    )
    out = contract_edge(g, "e")
    assert cyclic(out.vertex["u"].rotation) == ("a1", "a2", "b2", "b1")


def test_contract_twisted_edge_matches_flip_first():
    g = Herg.of(
        {"u": ["a1", "b1", "c1"], "v": ["a2", "b2"]},
        {"a": ("a1", "a2", True), "b": ("b1", "b2")},
        {"h": "c1"},
    )
    direct = contract_edge(g, "a")
    untwisted = flip(g, "v")
    assert not untwisted.edge["a"].twisted
    assert isomorphic(direct, contract_edge(untwisted, "a"), allow_reflection=True) is not None


def test_contract_non_loop_keeps_genus(theta):
    out = contract_edge(theta, "a")
    assert (out.v, out.e, out.h) == (1, 2, 0)
    assert euler_genus(out).gamma == euler_genus(theta).gamma


def stats_by_kept(g, mode):
    return {tuple(sorted(sel.kept)): st.as_tuple() for sel, st in enumerate_subgraphs(g, mode)}


def test_enumerate_loop_cut(loop):
    assert stats_by_kept(loop, "cut") == {
        ("e",): (0, 1, 1, 2, 0, 0, 0),
        (): (0, 0, 1, 0, 1, 0, 2),
    }


def test_enumerate_bridge_cut(bridge):
    assert stats_by_kept(bridge, "cut") == {
        ("e",): (1, 0, 1, 1, 0, 0, 0),
        (): (0, 0, 2, 0, 2, 0, 2),
    }


@pytest.mark.parametrize("mode", ["cut", "delete"])
def test_enumerate_single_vertex(empty, mode):
    assert stats_by_kept(empty(1), mode) == {(): (0, 0, 1, 1, 0, 0, 0)}


def test_enumeration_order(theta):
    kept = [sel.kept for sel, _ in enumerate_subgraphs(theta, "delete")]
    assert len(kept) == 8
    assert kept[:4] == [frozenset(), {"a"}, {"b"}, {"a", "b"}]


def test_hcount_in_cut_mode(g6, theta):
    for sel, st in enumerate_subgraphs(theta, "cut"):
        assert st.hcount == 2 * (3 - len(sel.kept))
    for _, st in enumerate_subgraphs(g6, "delete"):
        assert st.hcount == 1


def test_stats_match_materialized_subgraph(g6):
    sub = spanning_subgraph(g6, [], "cut")
    assert subgraph_stats(sub).as_tuple() == (0, 0, 2, 0, 2, 0, 3)


def test_state_budget(theta, monkeypatch):
    monkeypatch.setattr(config, "max_state_edges", 2)
    with pytest.raises(StateSumTooLarge):
        list(enumerate_subgraphs(theta, "cut"))
