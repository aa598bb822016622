import json

import pytest

from perfgraph import named
from perfgraph.cli import main
from perfgraph.graph import parse_graph6, serialize_graph6


@pytest.fixture
def g6file(tmp_path):
    def write(g, name="g.g6"):
        p = tmp_path / name
        p.write_bytes(serialize_graph6(g) + b"\n")
        return str(p)
    return write


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize_exit_codes(capsys, g6file):
    code, out, _ = run(capsys, ["recognize", "artemis", g6file(named.cycle(6))])
    assert code == 0 and json.loads(out)["result"]["verdict"] == "yes"
    code, out, _ = run(capsys, ["recognize", "artemis", g6file(named.cycle(5))])
    assert code == 1 and json.loads(out)["result"]["witness"]["kind"] == "odd-hole"
    big = g6file(named.path(20))
    assert run(capsys, ["recognize", "artemis", big])[0] == 2
    assert run(capsys, ["recognize", "artemis", big, "--guard", "30"])[0] == 0


def test_output_is_byte_identical(capsys, g6file):
    path = g6file(named.prism(1, 2, 2))
    first = run(capsys, ["detect", "prism", path])
    second = run(capsys, ["detect", "prism", path])
    assert first == second and first[0] == 0
    report = json.loads(first[1])
    assert report["kind"] == "prism-or-pyramid" and "seconds" not in report
    assert report["result"]["witness"]["kind"] == "prism"


def test_timing_flag(capsys, g6file):
    _, out, _ = run(capsys, ["detect", "hole", g6file(named.cycle(7)), "--timing"])
    assert "seconds" in json.loads(out)


def test_detect_absent(capsys, g6file):
    code, out, _ = run(capsys, ["detect", "min-long-hole", g6file(named.complete(4))])
    assert code == 1 and json.loads(out)["result"]["present"] is False


def test_color(capsys, g6file):
    code, out, _ = run(capsys, ["color", g6file(named.cycle(6))])
    d = json.loads(out)
    assert code == 0 and d["result"]["palette"] == 2 and d["assumed_preconditions"] == ["artemis"]
    assert run(capsys, ["color", g6file(named.cycle(5))])[0] == 1


def test_edgelist_input(capsys, tmp_path):
    p = tmp_path / "c6.txt"
    p.write_text("6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    code, out, _ = run(capsys, ["recognize", "weakly-triangulated", str(p)])
    assert code == 1 and json.loads(out)["input"]["m"] == 6


def test_census_csv(capsys):
    code, out, _ = run(capsys, ["census", "5", "--n-min", "5"])
    assert code == 0
    rows = dict(line.split(",", 1) for line in out.strip().splitlines())
    assert rows["class"] == "5"
    assert [rows[c] for c in ("all", "berge", "quasi-parity", "strict-quasi-parity",
                              "perfectly-contractile", "weakly-triangulated", "meyniel")] \
        == ["34", "33", "33", "33", "33", "33", "32"]


def test_census_json_and_figure(capsys, tmp_path):
    fig = tmp_path / "census.png"
    code, out, _ = run(capsys, ["census", "4", "--json", "--classes", "berge", "--figure", str(fig)])
    assert code == 0 and json.loads(out)["result"]["counts"]["berge"]["4"] == 11
    assert fig.stat().st_size > 0


def test_gadget_pi(capsys, tmp_path):
    cnf = tmp_path / "sat.cnf"
    cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    code, out, _ = run(capsys, ["gadget", "pi", str(cnf), "--out", str(tmp_path / "inst")])
    g6, side = out.strip().splitlines()
    assert code == 0 and parse_graph6(g6.encode()).n == 15
    assert json.loads(side)["names"][-2:] == ["a", "b"]
    assert (tmp_path / "inst.g6").read_text().strip() == g6
    code, out, _ = run(capsys, ["gadget", "reduce", "prism", str(cnf), "--json"])
    assert code == 0 and set(json.loads(out)) == {"command", "graph6", "sidecar"}


def test_smoke(capsys, tmp_path):
    fig = tmp_path / "smoke.png"
    code, out, _ = run(capsys, ["smoke", "--sizes", "20", "40", "--figure", str(fig)])
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "n,m,seconds,ratio,growth,certified" and len(lines) == 3
    assert fig.stat().st_size > 0


def test_error_codes(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["recognize", "chordal", "x.g6"])
    assert exc.value.code == 64
    assert run(capsys, ["recognize", "artemis", str(tmp_path / "missing.g6")])[0] == 66
    bad = tmp_path / "bad.g6"
    bad.write_text("~~~~\n")
    assert run(capsys, ["recognize", "artemis", str(bad)])[0] == 65
    cnf = tmp_path / "bad.cnf"
    cnf.write_text("p cnf 1 1\n1 1 0\n")
    assert run(capsys, ["gadget", "pi", str(cnf)])[0] == 65


def test_verbose_goes_to_stderr(capsys, g6file):
    _, out, err = run(capsys, ["recognize", "artemis", g6file(named.cycle(5)), "-v"])
    assert "odd-hole" in err and json.loads(out)
