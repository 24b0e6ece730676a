import pytest

from herg.core.model import Herg


@pytest.fixture
def bridge() -> Herg:
    return Herg.of({"u": ["d1"], "v": ["d2"]}, {"e": ("d1", "d2")})


@pytest.fixture
def loop() -> Herg:
    return Herg.of({"u": ["d1", "d2"]}, {"e": ("d1", "d2")})


@pytest.fixture
def twisted_loop() -> Herg:
    return Herg.of({"u": ["d1", "d2"]}, {"e": ("d1", "d2", True)})


@pytest.fixture
def vertex_hr() -> Herg:
    return Herg.of({"u": ["d1"]}, {}, {"h": "d1"})


@pytest.fixture
def g6() -> Herg:
    """Path with a half-ribbon: u(d1, dh) -e- v(d2), h on dh."""
    return Herg.of({"u": ["d1", "dh"], "v": ["d2"]}, {"e": ("d1", "d2")}, {"h": "dh"})


@pytest.fixture
def g7() -> Herg:
    """One vertex, one loop, one half-ribbon sitting in one of the loop's faces."""
    return Herg.of({"w": ["d1", "d2", "dh"]}, {"e": ("d1", "d2")}, {"h": "dh"})


@pytest.fixture
def theta() -> Herg:
    return Herg.of(
        {"u": ["a1", "b1", "c1"], "v": ["a2", "c2", "b2"]},
        {"a": ("a1", "a2"), "b": ("b1", "b2"), "c": ("c1", "c2")},
    )


@pytest.fixture
def two_hr_bridge() -> Herg:
    return Herg.of(
        {"u": ["d1", "x1"], "v": ["d2", "x2"]},
        {"e": ("d1", "d2")},
        {"h1": "x1", "h2": "x2"},
    )


def edgeless(n: int) -> Herg:
    return Herg.of({f"v{i}": [] for i in range(1, n + 1)})


@pytest.fixture
def empty():
    """E_n factory: n isolated bare vertices."""
    return edgeless
