import pytest

from herg.config import load_configuration


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("HERG_LOG_LEVEL", "HERG_MAX_STATE_EDGES", "HERG_MEMOIZE", "HERG_CORPUS_SEEDS"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    cfg = load_configuration()
    assert cfg.log_level == "WARNING"
    assert cfg.max_state_edges == 16
    assert cfg.memoize is False
    assert cfg.corpus_seeds == 2


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HERG_LOG_LEVEL", "debug")
    monkeypatch.setenv("HERG_MAX_STATE_EDGES", "8")
    monkeypatch.setenv("HERG_MEMOIZE", "true")
    cfg = load_configuration()
    assert cfg.log_level == "DEBUG"
    assert cfg.max_state_edges == 8
    assert cfg.memoize is True


@pytest.mark.parametrize(
    "name, value",
    [
        ("HERG_MAX_STATE_EDGES", "many"),
        ("HERG_MAX_STATE_EDGES", "-1"),
        ("HERG_CORPUS_SEEDS", "0"),
        ("HERG_MEMOIZE", "maybe"),
        ("HERG_LOG_LEVEL", "loud"),
    ],
)
def test_bad_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError, match=name):
        load_configuration()
