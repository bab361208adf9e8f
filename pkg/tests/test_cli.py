import json

import pytest

from quatrefl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_bounds_passes(capsys):
    code, out = run(capsys, "verify", "bounds")
    assert code == 0
    assert "5/5 checks passed" in out


def test_json_report_schema(capsys):
    code, out = run(capsys, "verify", "mubs", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True
    assert {"name", "expected", "computed", "pass"} <= set(data["checks"][0])


def test_reports_are_deterministic(capsys, monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    first = run(capsys, "verify", "bridge", "--json")
    second = run(capsys, "verify", "bridge", "--json")
    assert first == second
    assert json.loads(first[1])["timestamp"] == "2023-11-14T22:13:20Z"


def test_sampled_report_depends_only_on_flags(capsys, monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    args = ("verify", "design", "--group", "P1", "--seed-line", "w", "--json")
    assert run(capsys, *args) == run(capsys, *args)


def test_usage_errors_exit_2(capsys):
    assert main(["group", "order", "--group", "nope"]) == 2
    assert main(["catalog", "show"]) == 2
    assert main(["family", "exact"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_check_failure_exits_1(capsys):
    # two lines at angle 1/2 and 1/5: no bound applies, and e1, w do not form a design
    code, out = run(capsys, "verify", "design", "--group", "H32", "--seed-line", "w")
    assert code == 1
    assert "FAIL" in out


def test_group_commands(capsys):
    assert run(capsys, "group", "order", "--group", "P3")[1].count("3840") >= 1
    code, out = run(capsys, "group", "stabilizer", "--group", "P3", "--vector", '["(1,0,0,0)", "(0,0,0,0)"]', "--pointwise")
    assert code == 0 and "order: 8" in out


def test_orbit_emit_round_trips(capsys, tmp_path):
    path = tmp_path / "orbit.txt"
    code, _ = run(capsys, "group", "orbit", "--group", "P1", "--line", "w", "--emit", str(path))
    assert code == 0
    assert len(path.read_text().splitlines()) == 16
    code, out = run(capsys, "verify", "design", "--group", "P1", "--seed-line", str(path))
    assert code == 0


def test_bridge_and_fs(capsys):
    code, out = run(capsys, "bridge", "--group", "14")
    assert code == 0 and "320" in out
    code, out = run(capsys, "fs-indicator", "--group", "KC_quat")
    assert code == 0 and "indicator: -1" in out
    assert run(capsys, "fs-indicator", "--group", "13")[0] == 2   # quaternionic output, not complex


def test_tables(capsys):
    for n in ("1", "2"):
        code, out = run(capsys, "table", n)
        assert code == 0, out


def test_family_exact(capsys):
    code, out = run(capsys, "family", "exact", "--t", "1/2")
    assert code == 0
    assert run(capsys, "family", "exact", "--t", "1/3")[0] == 2
