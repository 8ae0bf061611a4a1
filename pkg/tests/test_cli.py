import io
import json
import subprocess
import sys

import pytest

from linedigraph.checks import verify_digraph
from linedigraph.cli import main, random_instance, run
from linedigraph.digraph import read_edge_list, write_edge_list
from linedigraph.families import (
    bidirected_cycle,
    complete_looped,
    dicycle,
    dipath,
    figure_eight,
    two_cube,
)
from linedigraph.line import line_digraph

TWO_CUBE = write_edge_list(two_cube())
P3 = write_edge_list(dipath(3))


def call(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_line_emits_labelled_edge_list(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["line"], TWO_CUBE)
    assert code == 0
    assert read_edge_list(out) == line_digraph(two_cube()).graph
    assert out.splitlines()[0] == "8 16"
    assert "# vertex 0 = arc (0,1)" in out


def test_input_from_file(monkeypatch, capsys, tmp_path):
    path = tmp_path / "cube.txt"
    path.write_text(TWO_CUBE)
    code, out, _ = call(monkeypatch, capsys, ["line", "--in", str(path)])
    assert code == 0 and out.startswith("8 16\n")
    code, _, err = call(monkeypatch, capsys, ["line", "--in", str(tmp_path / "missing.txt")])
    assert code == 1 and "FileNotFoundError" in err


def test_debruijn_spectrum_line(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["debruijn", "2", "3", "--spectrum"])
    assert code == 0
    assert "charpoly: x^7*(x-2)" in out.splitlines()
    assert out.startswith("8 16\n")


def test_verify_path_skips_hamilton(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["verify"], P3)
    assert code == 0
    line = next(ln for ln in out.splitlines() if "euler-hamilton" in ln)
    assert line.startswith("[skipped]") and line.endswith("not eulerian")
    assert out.splitlines()[-1] == "status: pass"


@pytest.mark.parametrize("D", [two_cube(), dicycle(5), dipath(4), figure_eight(), complete_looped(2),
                               bidirected_cycle(5)])
def test_verify_families_pass(D):
    rep = verify_digraph(D)
    assert rep.passed, rep.to_lines()


def test_verify_random_is_seeded_and_deterministic(monkeypatch, capsys):
    argv = ["verify", "--random", "12", "--seed", "5"]
    code1, out1, _ = call(monkeypatch, capsys, argv)
    code2, out2, _ = call(monkeypatch, capsys, argv)
    assert code1 == 0 and out1 == out2
    assert "0:line-counts" in out1 and "11:" in out1
    assert random_instance(5, 3) == random_instance(5, 3)


def test_verify_random_needs_seed(monkeypatch, capsys):
    with pytest.raises(SystemExit) as exc:
        call(monkeypatch, capsys, ["verify", "--random", "3"])
    assert exc.value.code == 2


def test_usage_errors_exit_2(monkeypatch, capsys):
    for argv in (["frobnicate"], ["walk", "--coin", "pauli"], ["debruijn", "2"], []):
        with pytest.raises(SystemExit) as exc:
            call(monkeypatch, capsys, argv)
        assert exc.value.code == 2


def test_domain_errors_exit_1(monkeypatch, capsys):
    code, out, err = call(monkeypatch, capsys, ["factorize"], P3)
    assert code == 1 and out == "" and err.startswith("error: NotRegular")
    code, _, err = call(monkeypatch, capsys, ["walk"], P3)
    assert code == 1 and "NotRegular" in err
    code, _, err = call(monkeypatch, capsys, ["line"], "3 2\n0 1\n")
    assert code == 1 and "ParseError" in err
    code, _, err = call(monkeypatch, capsys, ["cayley-demo", "4"])
    assert code == 1 and "BadOrder" in err
    code, _, err = call(monkeypatch, capsys, ["recognize"], write_edge_list(complete_looped(2)))
    assert code == 1 and "LoopsPresent" in err


def test_recognize(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["line"], TWO_CUBE)
    code, out, _ = call(monkeypatch, capsys, ["recognize"], out)
    assert code == 0
    assert "line_digraph=yes" in out
    root = read_edge_list(out.split("recognize:")[0])
    assert (root.n, root.m) == (4, 8)
    code, out, _ = call(monkeypatch, capsys, ["recognize"], TWO_CUBE)
    assert code == 0 and "line_digraph=no" in out


def test_factorize_and_walk(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["factorize"], TWO_CUBE)
    assert code == 0 and out.splitlines()[0] == "factors 2 4"
    code, out, _ = call(monkeypatch, capsys, ["walk", "--coin", "hadamard", "--steps", "3"], TWO_CUBE)
    rows = out.splitlines()
    assert rows[0] == "t,v,prob" and len(rows) == 1 + 4 * 4
    for t in range(4):
        assert sum(float(r.split(",")[2]) for r in rows[1 + 4 * t: 5 + 4 * t]) == pytest.approx(1, abs=1e-12)
    code, out, _ = call(monkeypatch, capsys, ["walk", "--json", "--coin", "hadamard"], TWO_CUBE)
    data = json.loads(out)["data"]
    assert data["dims"] == [8, 8] and data["coin"] == "hadamard" and len(data["entries"]) == 16


def test_iterate_spectrum_permanent(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["iterate", "2"], TWO_CUBE)
    assert code == 0 and out.startswith("16 32\n")
    code, out, _ = call(monkeypatch, capsys, ["spectrum"], TWO_CUBE)
    assert "charpoly D: x^2*(x^2-4)" in out and "status: pass" in out
    code, out, _ = call(monkeypatch, capsys, ["permanent"], TWO_CUBE)
    assert code == 0 and out.startswith("permanent: 16\n")
    code, out, _ = call(monkeypatch, capsys, ["permanent", "--json"], P3)
    assert json.loads(out)["data"]["permanent"] == "0"


def test_cayley_demo(monkeypatch, capsys):
    code, out, _ = call(monkeypatch, capsys, ["cayley-demo", "5"])
    assert code == 0
    assert "[pass] line-is-prism" in out
    prism = read_edge_list(out.split("cayley-demo:")[0])
    assert (prism.n, prism.m) == (10, 20)


def test_run_returns_report(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(TWO_CUBE))
    rep = run(["verify"])
    assert rep.command == "verify" and rep.exit_status == 0
    assert rep.digest == {"n": 4, "m": 8, "regular": 2}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linedigraph", "debruijn", "2", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("4 8\n")
    proc = subprocess.run([sys.executable, "-m", "linedigraph", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2 and "invalid choice" in proc.stderr


def test_verify_gates():
    from linedigraph.digraph import Digraph

    rep = verify_digraph(Digraph(4, [(0, 1)]))
    assert rep["line-strong"].status == "skipped" and "isolated" in rep["line-strong"].detail
    rep = verify_digraph(Digraph(2, [(0, 1)]))
    assert rep["line-strong"].status == "skipped"
    two_cycles = Digraph(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    rep = verify_digraph(two_cycles)
    assert rep["line-eulerian"].status == "pass" and rep.passed
    rep = verify_digraph(Digraph(3, [(0, 1), (2, 1)]))
    assert rep["line-eulerian"].status == "pass"


def test_report_rendering():
    from linedigraph.report import Report

    rep = Report("demo", {"n": 2})
    rep.add("a", "first", True)
    rep.info("b", "second", "note")
    rep.skip("c", "third", "why")
    assert rep.passed and rep.exit_status == 0
    assert rep.to_lines() == ["demo: n=2", "[pass] a (first)", "[info] b (second): note",
                              "[skipped] c (third): why", "status: pass"]
    rep.add("d", "fourth", False)
    assert rep.exit_status == 1 and json.loads(rep.render(as_json=True))["exit_status"] == 1
