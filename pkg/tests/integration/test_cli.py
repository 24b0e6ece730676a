import pytest

from herg.cli.fileformat import read_herg, serialize
from herg.cli.main import main
from herg.core.iso import isomorphic


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.herg"):
        path = tmp_path / name
        path.write_text(serialize(g), encoding="utf-8")
        return str(path)

    return _write


def test_info(write, bridge, capsys):
    assert main(["info", write(bridge)]) == 0
    out = capsys.readouterr().out.splitlines()
    for line in ("v = 2", "e = 1", "f_int = 1", "C_ext = 0", "gamma = 0", "orientable = true"):
        assert line in out


def test_poly(write, loop, capsys):
    path = write(loop)
    assert main(["poly", path, "--kind", "RCut"]) == 0
    assert capsys.readouterr().out == "y + z*s*t^2\n"
    assert main(["poly", path, "--kind", "RCut", "--subst", "duality"]) == 0
    assert capsys.readouterr().out == "a + a^-1*b\n"
    assert main(["poly", path, "--kind", "PCut"]) == 0
    assert capsys.readouterr().out == "a^2 + b\n"


def test_poly_expand_x(write, bridge, capsys):
    assert main(["poly", write(bridge), "--kind", "RSpan", "--expand-x"]) == 0
    assert capsys.readouterr().out == "x\n"


def test_poly_rejects_subst_on_p(write, loop, capsys):
    assert main(["poly", write(loop), "--kind", "PSpan", "--subst", "duality"]) == 2
    assert "herg: error:" in capsys.readouterr().err


def test_dual(write, bridge, loop, tmp_path, capsys):
    out = tmp_path / "dual.herg"
    assert main(["dual", write(bridge), "-o", str(out)]) == 0
    assert isomorphic(read_herg(out), loop) is not None


def test_iso_exit_codes(write, loop, bridge, twisted_loop, capsys):
    assert main(["iso", write(loop, "a.herg"), write(loop, "b.herg")]) == 0
    assert capsys.readouterr().out.startswith("isomorphic\n")
    assert main(["iso", write(loop, "a.herg"), write(bridge, "b.herg")]) == 1
    assert main(["iso", write(loop, "a.herg"), write(twisted_loop, "b.herg")]) == 1


def test_gen_is_reproducible(capsys):
    argv = ["gen", "--vertices", "3", "--edges", "4", "--halves", "2", "--seed", "42", "--twists"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("herg 1\n")


def test_verify_file(write, g7, capsys):
    assert main(["verify", write(g7), "--suite", "all"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    assert "FAIL " not in out


def test_verify_corpus(capsys):
    assert main(["verify", "--corpus", "--max-edges", "1", "--seed", "7", "-q"]) == 0
    assert "0 failed" in capsys.readouterr().out


def test_classify(write, g6, capsys):
    assert main(["classify", write(g6)]) == 0
    out = capsys.readouterr().out
    assert "vertex u : external" in out
    assert "vertex v : internal" in out
    assert "edge e : " in out and "bridge" in out


def test_canon(write, loop, capsys):
    assert main(["canon", write(loop)]) == 0
    assert capsys.readouterr().out.startswith("key = ")


@pytest.mark.parametrize(
    "text",
    ["vertex u : d1\n", "herg 1\nvertex u : d1\n", "herg 1\nedge e : d1 d2\n"],
)
def test_bad_input_exits_2(tmp_path, capsys, text):
    path = tmp_path / "bad.herg"
    path.write_text(text, encoding="utf-8")
    assert main(["info", str(path)]) == 2
    assert "line " in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["info", "/nonexistent/file.herg"]) == 2


def test_verify_needs_input(capsys):
    assert main(["verify"]) == 2
