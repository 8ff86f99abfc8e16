import csv
import io
import json
import subprocess
import sys

import pytest

from alcoves.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_group_info_a3(capsys):
    code, data = run_json(capsys, "group-info", "--n", "3")
    assert code == 0
    assert data["command"] == "group-info"
    assert data["params"] == {"n": 3}
    result = data["result"]
    assert result["finite_weyl_group_order"] == 24
    assert result["zone_count"] == 27
    words = [e["word"] for e in result["parallelepiped_elements"]]
    # s1 and s3 commute, so these are the words 0, 01, 03, 013, 0132 up to reordering
    assert words == [[], [0], [0, 1], [0, 3], [0, 3, 1], [0, 3, 1, 2]]
    assert [e["length"] for e in result["parallelepiped_elements"]] == [0, 1, 2, 2, 3, 4]
    assert data["checks"] == []


def test_group_info_small(capsys):
    assert len(run_json(capsys, "group-info", "--n", "2")[1]["result"]["parallelepiped_elements"]) == 2
    assert run_json(capsys, "group-info", "--n", "1")[1]["result"]["omega_order"] == 2


@pytest.mark.parametrize("lam,size", [("0,0,0", 24), ("1,0,0", 96)])
def test_interval_size_all_methods(capsys, lam, size):
    for method in ("enumerate", "weighted", "geometric"):
        code, data = run_json(capsys, "interval-size", "--n", "3", "--a", "1", "--lambda", lam, "--method", method)
        assert code == 0 and data["result"]["size"] == size


def test_cross_check(capsys):
    code, data = run_json(capsys, "interval-size", "--n", "2", "--a", "2", "--lambda", "2,3", "--cross-check")
    assert code == 0
    assert data["result"]["by_method"]["enumerate"] == data["result"]["by_method"]["weighted"]
    assert data["checks"] == [{"name": "methods agree", "status": "pass", "counterexample": None}]


def test_cross_check_mismatch_exits_1(capsys, monkeypatch):
    import alcoves.cli as cli

    real = cli._interval_by
    monkeypatch.setattr(cli, "_interval_by", lambda m, a, lam: real(m, a, lam) + (m == "weighted"))
    code, data = run_json(capsys, "interval-size", "--n", "2", "--a", "1", "--lambda", "1,1", "--cross-check")
    assert code == 1
    assert data["checks"][0]["status"] == "fail"


@pytest.mark.parametrize("argv", [
    ["interval-size", "--n", "3", "--a", "7", "--lambda", "0,0,0"],
    ["interval-size", "--n", "3", "--a", "1", "--lambda", "1,-1,0"],
    ["interval-size", "--n", "3", "--a", "1", "--lambda", "1,0"],
    ["interval-size", "--n", "2", "--a", "1", "--lambda", "1,0", "--method", "geometric"],
    ["interval-size", "--n", "3", "--lambda", "0,0,0"],
    ["verify", "geom", "--n", "2"],
    ["group-info", "--n", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [
    ["verify", "nonsense"],
    ["group-info", "--format", "xml"],
    ["interval-size", "--lambda", "a,b"],
    ["frobnicate"],
])
def test_argparse_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_tables_a3(capsys):
    code, out, _ = run(capsys, "tables", "--n", "3")
    assert code == 0
    blocks = [list(csv.reader(io.StringIO(b))) for b in out.strip().split("\n\n")]
    phi, cplus, diff = blocks
    assert phi[0][0] == "root" and len(phi[0]) == 28
    assert phi[1][0] == "alpha1" and phi[1][19:] == ["*"] * 9
    assert cplus[1][:3] == ["a1", "1", "4"]
    assert diff == [["table", "row", "zone", "expected", "computed"]]


def test_tables_out_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "tables", "--n", "2", "--out", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["c_plus.csv", "phi_plus.csv"]
    rows = list(csv.reader((tmp_path / "c_plus.csv").open()))
    assert len(rows) == 3 and len(rows[0]) == 10


def test_tables_rank_one(capsys):
    code, data = run_json(capsys, "tables", "--n", "1")
    assert code == 0
    assert data["result"] == {"zones": 3, "elements": 1}


def test_tables_diff_failure_exits_1(capsys, monkeypatch):
    import alcoves.tables as tables

    monkeypatch.setattr(tables, "C_PLUS_A3", ((0,) * 27,) + tables.C_PLUS_A3[1:])
    code, data = run_json(capsys, "tables", "--n", "3")
    assert code == 1
    assert data["result"]["diff_cells"] == 27


@pytest.mark.parametrize("argv", [
    ["verify", "criterion", "--n", "2", "--len", "5"],
    ["verify", "cartan", "--n", "4"],
    ["verify", "tiling", "--n", "2", "--coord-bound", "2"],
    ["verify", "zones", "--n", "2"],
    ["verify", "recurrence", "--n", "2", "--a", "2"],
    ["verify", "weighted", "--n", "2"],
    ["verify", "minkowski", "--n", "2"],
    ["verify", "ehrhart", "--n", "2"],
    ["verify", "geom", "--a", "3", "--coord-bound", "1"],
])
def test_verify_suites_pass(capsys, argv):
    code, data = run_json(capsys, *argv)
    assert code == 0, [c for c in data["checks"] if c["status"] != "pass"]
    assert data["result"]["passed"] is True
    assert all(c["status"] == "pass" for c in data["checks"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    import alcoves.cli as cli

    monkeypatch.setattr(cli, "leq", lambda x, y: True)
    code, data = run_json(capsys, "verify", "criterion", "--n", "1", "--len-bound", "3")
    assert code == 1
    failed = [c for c in data["checks"] if c["status"] == "fail"]
    assert failed and failed[0]["counterexample"]


def test_text_and_csv_formats(capsys):
    _, text, _ = run(capsys, "interval-size", "--n", "3", "--a", "1", "--lambda", "1,0,0", "--format", "text")
    assert "size: 96" in text
    _, out, _ = run(capsys, "verify", "cartan", "--n", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["name", "status", "counterexample"]
    assert all(r[1] == "pass" for r in rows[1:])


def test_output_is_deterministic(capsys):
    argv = ["verify", "zones", "--n", "2", "--format", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_out_file(capsys, tmp_path):
    target = tmp_path / "info.json"
    code, out, _ = run(capsys, "group-info", "--n", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["finite_weyl_group_order"] == 6


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("group-info", n=2, fmt="yaml")
    with pytest.raises(UsageError):
        RunConfig("verify", n=2, len_bound=-1)
    assert RunConfig("interval-size", n=2, a=1, weight=(1, 0)).params()["lambda"] == [1, 0]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "alcoves", "group-info", "--n", "1", "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "omega_order: 2" in proc.stdout
