import csv
import json
import subprocess
import sys

import pytest

from induced_matching.cli import EXIT_ERROR, EXIT_FINDING, EXIT_OK, main
from induced_matching.generators import path
from induced_matching.io import load_report, parse_edge_list, verify_report, write_edge_list


def _gen(tmp_path, name, *args):
    out = tmp_path / name
    assert main(["generate", *args, "--out", str(out)]) == EXIT_OK
    return out


def test_generate_examples(tmp_path):
    assert parse_edge_list(_gen(tmp_path, "h1.el", "h1", "--delta", "4").read_text()).n == 9
    c5 = parse_edge_list(_gen(tmp_path, "c5.el", "c5blowup", "--orders", "2,2,2,2,2").read_text())
    assert c5.n == 10 and c5.m == 20
    reg = parse_edge_list(_gen(tmp_path, "r.el", "regular", "--n", "10", "--d", "3", "--seed", "1").read_text())
    assert reg.m == 15
    base = tmp_path / "p3.el"
    base.write_text(write_edge_list(path(3)))
    pend = parse_edge_list(_gen(tmp_path, "pend.el", "pendants", "--base", str(base), "--k", "2").read_text())
    assert pend.n == 9


def test_generate_bad_params(tmp_path, capsys):
    assert main(["generate", "h1", "--out", str(tmp_path / "x")]) == EXIT_ERROR
    assert main(["generate", "regular", "--n", "5", "--d", "3"]) == EXIT_ERROR


def test_solve_constructive_h1_1000(tmp_path):
    src = _gen(tmp_path, "h1k.el", "h1", "--delta", "1000")
    out = tmp_path / "r.json"
    assert main(["solve", str(src), "--algo", "constructive", "--out", str(out)]) == EXIT_OK
    report = load_report(out.read_text())
    steps = report["trace"]["steps"]
    assert len(steps) == 1 and steps[0]["certified"] and steps[0]["footprint"] == 251001
    assert verify_report(report) == []


def test_solve_exact_values(tmp_path):
    p5 = tmp_path / "p5.el"
    p5.write_text(write_edge_list(path(5)))
    out = tmp_path / "p5.json"
    assert main(["solve", str(p5), "--algo", "exact", "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["exact"]["value"] == 2
    c5 = _gen(tmp_path, "c5.el", "c5blowup", "--orders", "2,2,2,2,2")
    assert main(["solve", str(c5), "--algo", "exact", "--out", str(out)]) == EXIT_OK
    report = load_report(out.read_text())
    assert report["exact"]["value"] == 1 and report["bounds"]["theorem_guarantee"] == 2


def test_solve_greedy_and_budget(tmp_path):
    p5 = tmp_path / "p5.el"
    p5.write_text(write_edge_list(path(5)))
    for algo in ("greedy-first", "greedy-minconf"):
        out = tmp_path / f"{algo}.json"
        assert main(["solve", str(p5), "--algo", algo, "--out", str(out)]) == EXIT_OK
        assert verify_report(load_report(out.read_text())) == []
    hard = _gen(tmp_path, "g.el", "random", "--n", "40", "--p", "0.2", "--seed", "3")
    out = tmp_path / "b.json"
    assert main(["solve", str(hard), "--algo", "exact", "--budget", "1", "--out", str(out)]) == EXIT_OK
    assert load_report(out.read_text())["exact"]["status"] == "budget-exhausted"


def test_solve_io_and_parse_errors(tmp_path):
    assert main(["solve", str(tmp_path / "missing.el")]) == EXIT_ERROR
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 0\n")
    assert main(["solve", str(bad)]) == EXIT_ERROR


def test_solve_certificate_failure_exit_code(tmp_path, monkeypatch):
    # Mark every step uncertified on a graph where the theorem applies.
    import dataclasses

    import induced_matching.cli as cli

    real_run = cli.run

    def broken_run(g, config):
        m, trace = real_run(g, config)
        trace.steps = [dataclasses.replace(s, certified=False) for s in trace.steps]
        return m, trace

    monkeypatch.setattr(cli, "run", broken_run)
    src = _gen(tmp_path, "h1.el", "h1", "--delta", "200")
    out = tmp_path / "r.json"
    with pytest.warns(UserWarning, match="empirical"):
        assert main(["solve", str(src), "--delta0", "200", "--out", str(out)]) == EXIT_FINDING
    assert load_report(out.read_text())["trace"]["certificate_ok"] is False


def test_conjecture_scan_cli(tmp_path):
    out = tmp_path / "scan.json"
    assert main(["conjecture-scan", "--max-n", "5", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["violators"] == [] and data["exceptions"] == []
    assert main(["conjecture-scan", "--max-n", "8"]) == EXIT_ERROR
    out2 = tmp_path / "scan2.json"
    assert main(["conjecture-scan", "--max-n", "5", "--out", str(out2)]) == EXIT_OK
    assert out.read_bytes() == out2.read_bytes()


def test_conjecture_scan_random_cli(tmp_path):
    out = tmp_path / "rand.json"
    assert main(["conjecture-scan", "--random-trials", "5", "--random-n", "8..9", "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["checked"] == 5


def test_conjecture_scan_violator_exit_code(tmp_path, monkeypatch):
    import induced_matching.scan as scan
    from induced_matching.bounds import VIOLATED, ComponentStatus

    def fake_check(g, budget=None):
        return [ComponentStatus(tuple(g.vertices()), g.n, 3, 0, True, 1, VIOLATED, None)]

    monkeypatch.setattr(scan, "conjecture_check", fake_check)
    out = tmp_path / "v.json"
    assert main(["conjecture-scan", "--max-n", "4", "--out", str(out)]) == EXIT_FINDING
    v = json.loads(out.read_text())["violators"]
    assert v and all("edges" in c and "B" in c for c in v)


def test_bench_cli(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "path:n=5..9;cycle:n=6..9;h1:delta=6,copies=3", "--out", str(out)]) == EXIT_OK
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert len(rows) == 10
    for row in rows[:-1]:
        assert row["greedy_first"] == row["exact"]
    assert rows[-1]["constructive"] == rows[-1]["theorem_guarantee"] == "3"
    assert main(["bench", "path:n=5", "--algos", "magic"]) == EXIT_ERROR


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "induced_matching.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip()
