import subprocess
import sys

import pytest

from localbox.boxrep import Representation, realize
from localbox.cli import main
from localbox.graph import complement, cycle_graph, emit_graph, petersen_graph, read_graph


@pytest.fixture
def c5(tmp_path):
    path = tmp_path / "c5.el"
    path.write_bytes(emit_graph(cycle_graph(5)))
    return path


def test_exact_writes_certificate(c5, capsys):
    assert main(["exact", "lbox", str(c5)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "2"
    R = Representation.from_json((c5.parent / "c5.el.lbox.rep").read_text())
    assert realize(R) == cycle_graph(5)


@pytest.mark.parametrize("what, value", [("box", "2"), ("chi", "3")])
def test_exact_other_values(c5, capsys, what, value):
    assert main(["exact", what, str(c5)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == value


def test_verify_exit_codes(c5, tmp_path):
    rep = tmp_path / "c5.rep"
    assert main(["exact", "lbox", str(c5), "--out", str(rep)]) == 0
    assert main(["verify", str(c5), str(rep), "--d", "2"]) == 0
    assert main(["verify", str(c5), str(rep), "--d", "1"]) == 1
    assert main(["verify", str(c5), str(tmp_path / "missing.rep"), "--d", "2"]) == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "gnp", "--n", "30", "--np", "2"])
    assert exc.value.code == 2


def test_malformed_graph_exits_2(tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("0 1\n1 banana\n")
    assert main(["exact", "lbox", str(bad)]) == 2


def test_construct_gcreg_and_codec(tmp_path):
    g = tmp_path / "pet.g6"
    g.write_bytes(emit_graph(complement(petersen_graph()), "graph6"))
    rep, blob, back = tmp_path / "pet.rep", tmp_path / "pet.bin", tmp_path / "back.rep"
    assert main(["construct", "gcreg", str(g), "--out", str(rep)]) == 0
    assert main(["codec", "encode", str(rep), "--d", "2", "--out", str(blob)]) == 0
    assert main(["codec", "decode", str(blob), "--out", str(back)]) == 0
    assert main(["verify", str(g), str(back), "--d", "2"]) == 0


def test_construct_gnp_writes_graph(tmp_path):
    rep = tmp_path / "gnp.rep"
    assert main(["construct", "gnp", "--n", "100", "--np", "2", "--seed", "1", "--out", str(rep)]) == 0
    G = read_graph(str(tmp_path / "gnp.rep.g6"))
    assert realize(Representation.from_json(rep.read_text())) == G


def test_construct_shift_and_color(tmp_path):
    rep, g = tmp_path / "s.rep", tmp_path / "s.g6"
    assert main(["construct", "shift", "--n", "6", "--out", str(rep), "--graph-out", str(g)]) == 0
    assert main(["color", "lbox2", str(g), str(rep)]) == 0


def test_mc_and_bounds_and_steiner(capsys, tmp_path):
    assert main(["mc", "multicyclic", "--n", "50", "--c", "0.5", "--trials", "20", "--seed", "3"]) == 0
    assert capsys.readouterr().out.startswith("n,c,trials")
    assert main(["bounds", "counting", "--n", "4", "--d", "2"]) == 0
    assert "104" in capsys.readouterr().out
    out = tmp_path / "a3.txt"
    assert main(["steiner", "affine", "--q", "3", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 3 + 12


def test_module_entry_point(c5):
    proc = subprocess.run([sys.executable, "-m", "localbox", "exact", "lbox", str(c5)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("2")


@pytest.mark.parametrize("args", [
    ["construct", "gnp", "--n", "80", "--np", "2", "--seed", "9"],
    ["mc", "multicyclic", "--n", "40", "--c", "0.5", "--trials", "10", "--seed", "9"],
])
def test_same_seed_same_bytes(tmp_path, args):
    a, b = tmp_path / "a.out", tmp_path / "b.out"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
