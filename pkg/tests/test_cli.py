import json
import subprocess
import sys

import pytest

from cartdom.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {
        "p4": "4\n0 1\n1 2\n2 3\n",
        "k2": "2\n0 1\n",
        "isolated": "3\n0 1\n",
        "loop": "3\n0 1\n2 2\n",
    }.items():
        path = tmp_path / f"{name}.el"
        path.write_text(text)
        out[name] = str(path)
    return out


def test_solve_total_on_p4(files, capsys):
    assert main(["solve", "--kind", "total", "--graph", files["p4"]]) == 0
    assert capsys.readouterr().out.strip() == "gamma_t = 2; set = {1,2}"


def test_solve_paired_prints_pairs(files, capsys):
    assert main(["solve", "--kind", "paired", "--graph", files["p4"]]) == 0
    assert capsys.readouterr().out.strip() == "gamma_pr = 2; set = {1,2}; pairs = 1-2"


def test_solve_paired_with_isolated_vertex(files, capsys):
    assert main(["solve", "--kind", "paired", "--graph", files["isolated"]]) == 2
    err = capsys.readouterr().err
    assert "isolated vertex" in err and len(err.strip().splitlines()) == 1


def test_parse_error_is_an_input_error(files, capsys):
    assert main(["solve", "--graph", files["loop"]]) == 2
    assert "line 3" in capsys.readouterr().err


def test_missing_file_is_an_input_error(tmp_path, capsys):
    assert main(["solve", "--graph", str(tmp_path / "none.el")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_usage_errors_exit_2(files):
    for argv in (["bogus"], [], ["solve"], ["verify", "--theorem", "9", "--factors", files["k2"]]):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2


def test_verify_two_edges(files, capsys, tmp_path):
    js = tmp_path / "r.json"
    assert main(["verify", "--theorem", "2", "--factors", files["k2"], files["k2"], "--json", str(js)]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "left=4 right=4" in out
    doc = json.loads(js.read_text())
    assert doc["left"] == 4 and doc["right"] == 4 and doc["pass"] is True


def test_verify_arity_error(files, capsys):
    assert main(["verify", "--theorem", "2", "--factors", files["k2"]]) == 2


def test_product_writes_edge_list(files, tmp_path):
    out = tmp_path / "c4.el"
    assert main(["product", "--factors", files["k2"], files["k2"], "--out", str(out)]) == 0
    lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    assert lines == ["4", "0 1", "0 2", "1 3", "2 3"]


@pytest.mark.parametrize(
    "kind, vertices, pairs, status",
    [
        ("plain", "1,2", None, 0),
        ("plain", "0", None, 1),
        ("total", "1,2", None, 0),
        ("total", "0,3", None, 1),
        ("paired", "1,2", None, 0),
        ("paired", "0,1,2,3", "0-1,2-3", 0),
        ("paired", "0,1,2,3", "0-2,1-3", 1),
        ("paired", "0,3", None, 1),
    ],
)
def test_check_certificate(files, kind, vertices, pairs, status):
    argv = ["check-certificate", "--graph", files["p4"], "--kind", kind, "--set", vertices]
    if pairs:
        argv += ["--pairs", pairs]
    assert main(argv) == status


def test_check_certificate_rejects_garbage(files):
    base = ["check-certificate", "--graph", files["p4"]]
    assert main(base + ["--set", "1,x"]) == 2
    assert main(base + ["--set", "9"]) == 2
    assert main(base + ["--kind", "paired", "--set", "0,1", "--pairs", "0:1"]) == 2


def test_sweep_writes_csv_and_json(files, tmp_path, capsys):
    out, js = tmp_path / "s.csv", tmp_path / "s.json"
    status = main(["sweep", "--theorem", "2", "--graphs", files["p4"], files["k2"], "--out", str(out), "--json", str(js)])
    assert status == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("theorem,factors,left,right")
    assert len(rows) == 4  # k2xk2, k2xp4, p4xp4 in corpus order
    assert json.loads(js.read_text())["summary"]["failed"] == 0


def test_sweep_failure_sets_status_1(monkeypatch, files, tmp_path):
    from cartdom import cli, harness

    real = harness.run_theorem

    def broken(*a, **k):
        r = real(*a, **k)
        return harness.TheoremReport(r.theorem, r.factors, r.right + 1, r.right, r.constant, r.D_size, False)

    monkeypatch.setattr(harness, "run_theorem", broken)
    status = cli.main(["sweep", "--theorem", "2", "--graphs", files["k2"], "--out", str(tmp_path / "x.csv")])
    assert status == 1


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "cartdom", "solve", "--graph", files["p4"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "gamma = 2; set = {0,2}"
