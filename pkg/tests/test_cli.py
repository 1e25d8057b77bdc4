import json

import pytest

import main
from main import EXIT_CRITERION_FAILED, EXIT_INVALID_INPUT, EXIT_OK


def run(capsys, *argv):
    code = main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tables_tsv(capsys, golden_tables):
    code, out, _ = run(capsys, "tables")
    assert code == EXIT_OK
    assert out == golden_tables


def test_tables_is_byte_stable(capsys):
    _, first, _ = run(capsys, "tables", "--format", "json")
    _, second, _ = run(capsys, "tables", "--format", "json")
    assert first == second
    assert len(json.loads(first)["rows"]) == 52


def test_check_satisfied(capsys):
    code, out, _ = run(capsys, "check", "--y", "5", "--g", "23", "--d", "18")
    assert code == EXIT_OK
    assert out.startswith("✅")


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--y", "(2,4)", "--g", "28", "--d", "23", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "criterion_satisfied"
    assert data["route"] == "cone"
    assert data["h1"]["reason"] == "extremal_rational_curve"


def test_check_failed(capsys):
    code, out, _ = run(capsys, "check", "--y", "5", "--g", "35", "--d", "22")
    assert code == EXIT_CRITERION_FAILED
    assert "node_bound" in out


def test_check_rational(capsys):
    code, out, _ = run(capsys, "check", "--rational", "quadric24")
    assert code == EXIT_OK
    assert "quadric_24" in out


@pytest.mark.parametrize("argv", [
    ("check", "--y", "5", "--g", "23"),
    ("check", "--rational", "quartic"),
    ("check", "--y", "(0,5)", "--g", "1", "--d", "1"),
    ("check", "--y", "7", "--g", "1", "--d", "1"),
    ("cone", "6", "1", "48"),
    ("scan", "--y", "5", "--g", "x..y", "--d", "1"),
    ("frobnicate",),
])
def test_invalid_input(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_INVALID_INPUT


def test_missing_config(capsys, tmp_path):
    code, _, err = run(capsys, "--config", str(tmp_path / "missing.json"), "tables")
    assert code == EXIT_INVALID_INPUT
    assert "❌" in err


def test_cone_json(capsys):
    code, out, _ = run(capsys, "cone", "6", "19", "48", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["cone"]["kind"] == "rational_rays"
    assert data["cone"]["nef_left"] == [-59, 34]


def test_scan_chart(capsys):
    code, out, err = run(capsys, "scan", "--y", "5", "--g", "23..24", "--d", "18..19")
    assert code == EXIT_OK
    assert "P" in out
    assert "g=23" in out
    assert "扫描" in err


def test_parse_range():
    assert main.parse_range("3..5") == range(3, 6)
    assert main.parse_range("4") == range(4, 5)
    assert list(main.parse_range("5..3")) == []
