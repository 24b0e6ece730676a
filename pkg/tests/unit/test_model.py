import pytest

from herg.core import Herg, complete, completion_leaves, flip, prune, underlying, validate
from herg.errors import InvalidHergError, PruneError


def messages(g: Herg) -> list[str]:
    return [v.message for v in validate(g).violations]


def test_bare_vertex_is_valid():
    assert validate(Herg.of({"x": []})).ok


def test_orphan_dart_reported():
    assert "orphan dart d1" in messages(Herg.of({"u": ["d1"]}))


def test_edge_with_repeated_dart_reported():
    g = Herg.of({"u": ["d1"]}, {"e": ("d1", "d1")})
    assert any("darts not distinct" in m for m in messages(g))


def test_dart_in_two_rotations_reported():
    g = Herg.of({"u": ["d1"], "v": ["d1"]}, {}, {"h": "d1"})
    assert any(v.kind == "duplicate-dart" for v in validate(g).violations)


def test_edge_and_half_names_share_namespace():
    g = Herg.of({"u": ["d1", "d2", "d3"]}, {"x": ("d1", "d2")}, {"x": "d3"})
    assert any(v.kind == "duplicate-name" for v in validate(g).violations)


def test_bad_token_reported():
    g = Herg.of({"u-1": []})
    assert any(v.kind == "bad-token" for v in validate(g).violations)


def test_require_valid_raises_with_report():
    with pytest.raises(InvalidHergError) as info:
        Herg.of({"u": ["d1"]}).require_valid("test")
    assert not info.value.report.ok


def test_record_order_does_not_matter():
    one = Herg.of({"u": ["d1"], "v": ["d2"]}, {"e": ("d1", "d2")})
    two = Herg.of({"v": ["d2"], "u": ["d1"]}, {"e": ("d1", "d2")})
    assert one == two


def test_lookups(g6):
    assert g6.vertex_of["dh"] == "u"
    assert g6.partner("d1") == "d2"
    assert g6.halves_at("u") == ["h"]
    assert not g6.is_loop("e")
    assert (g6.v, g6.e, g6.h) == (2, 1, 1)


def test_complete_vertex_with_half_ribbon(vertex_hr):
    done = complete(vertex_hr)
    assert done == Herg.of({"u": ["d1"], "h_leaf": ["h_tip"]}, {"h": ("d1", "h_tip")})
    assert completion_leaves(vertex_hr, done) == {"h_leaf"}


def test_complete_without_half_ribbons_is_identity(bridge):
    assert complete(bridge) == bridge


def test_complete_star():
    g = Herg.of({"u": ["d1", "d2", "d3"]}, {}, {"h1": "d1", "h2": "d2", "h3": "d3"})
    star = complete(g)
    assert (star.v, star.e, star.h) == (4, 3, 0)
    assert prune(star, completion_leaves(g, star)) == g


def test_prune_bridge_leaf(bridge):
    assert prune(bridge, {"v"}) == Herg.of({"u": ["d1"]}, {}, {"e": "d1"})


@pytest.mark.parametrize(
    "leaves, reason",
    [({"w"}, "no such vertex"), ({"u", "v"}, "both ends")],
)
def test_prune_errors(bridge, leaves, reason):
    with pytest.raises(PruneError, match=reason):
        prune(bridge, leaves)


def test_prune_rejects_non_leaf(loop):
    with pytest.raises(PruneError, match="not a degree-1 vertex"):
        prune(loop, {"u"})


def test_prune_rejects_twisted_edge():
    g = Herg.of({"u": ["d1"], "v": ["d2"]}, {"e": ("d1", "d2", True)})
    with pytest.raises(PruneError, match="twisted"):
        prune(g, {"v"})


def test_underlying(vertex_hr, bridge, g6):
    assert underlying(vertex_hr) == Herg.of({"u": []})
    assert underlying(bridge) == bridge
    assert underlying(g6) == bridge


def test_flip_reverses_rotation_and_toggles_twists():
    g = Herg.of(
        {"u": ["a1", "b1", "l1", "l2"], "v": ["a2", "b2"]},
        {"a": ("a1", "a2"), "b": ("b1", "b2", True), "l": ("l1", "l2")},
    )
    flipped = flip(g, "u")
    assert flipped.vertex["u"].rotation == ("l2", "l1", "b1", "a1")
    assert flipped.edge["a"].twisted
    assert not flipped.edge["b"].twisted
    assert not flipped.edge["l"].twisted
    assert flip(flipped, "u") == g
