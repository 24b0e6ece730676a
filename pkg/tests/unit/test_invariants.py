import pytest

from herg.config import config
from herg.core.model import Herg
from herg.errors import InvalidHergError, StateSumTooLarge
from herg.poly import (
    InvariantKind,
    QuotientPoly,
    br_polynomial,
    duality_subst,
    invariant,
    m_polynomial,
    recursive_rcut,
    recursive_rspan,
)


def s(g, kind) -> str:
    return invariant(g, kind).to_string()


def test_rcut_small(loop, bridge):
    assert s(loop, "RCut") == "y + z*s*t^2"
    assert s(bridge, InvariantKind.RCUT) == "xm1*z^2*s^2*t^2 + 1"


def test_rspan_small(loop, bridge, g6):
    assert s(bridge, "RSpan") == "xm1 + 1"
    assert s(loop, "RSpan") == "y + 1"
    assert s(g6, "RSpan") == "xm1*z*s*t + z*s*t"


def test_twisted_loop_carries_w(twisted_loop):
    assert s(twisted_loop, "RSpan") == "y*z*w + 1"


def test_pspan_edgeless(empty):
    assert s(empty(2), "PSpan") == "a^2"
    g = Herg.of({"u": ["d1"], "v": []}, {}, {"h": "d1"})
    assert s(g, "PSpan") == "a*b"


def test_pcut_and_m(loop, bridge):
    assert s(loop, "PCut") == "a^2 + b"
    assert s(loop, "M") == "a^2 + b"
    assert isinstance(invariant(bridge, "PCut"), QuotientPoly)
    assert s(bridge, "PCut") == "a*b + a"
    assert m_polynomial(bridge).to_string() == "a + b^2"


def test_duality_substitution_values(loop, bridge, g6):
    assert duality_subst(invariant(bridge, "RSpan")).to_string() == "a + 1"
    assert duality_subst(invariant(loop, "RSpan")).to_string() == "a + 1"
    assert duality_subst(invariant(g6, "RSpan")).to_string() == "b + a^-1*b"
    assert duality_subst(invariant(loop, "RCut")).to_string() == "a + a^-1*b"


@pytest.mark.parametrize("memoize", [False, True])
def test_recursion_matches_state_sum(theta, memoize):
    assert recursive_rcut(theta, memoize=memoize) == invariant(theta, "RCut")
    assert recursive_rspan(theta, memoize=memoize) == invariant(theta, "RSpan")


def test_recursion_with_half_ribbons(g6, two_hr_bridge):
    for g in (g6, two_hr_bridge):
        assert recursive_rcut(g) == invariant(g, "RCut")
        assert recursive_rspan(g) == invariant(g, "RSpan")


def test_br_polynomial(bridge, loop):
    assert br_polynomial(bridge).to_string() == "xm1 + 1"
    assert br_polynomial(loop).to_string() == "y + 1"


def test_br_ignores_half_ribbons(g6, bridge):
    assert br_polynomial(g6) == br_polynomial(bridge)


def test_unknown_kind(loop):
    with pytest.raises(ValueError):
        invariant(loop, "Tutte")


def test_state_budget(theta, monkeypatch):
    monkeypatch.setattr(config, "max_state_edges", 2)
    with pytest.raises(StateSumTooLarge):
        invariant(theta, "RSpan")


def test_invalid_input_rejected():
    bad = Herg.of({"u": ["d1"]}, {})
    with pytest.raises(InvalidHergError):
        invariant(bad, "RSpan")
