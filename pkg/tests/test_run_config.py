import json

import pytest

from config import load_run_config
from config.run_config import RunConfig, y_key
from isolated_curves.models import ConfigError, Route

MINIMAL = {
    "embedding_rows": [{"y_type": "(5)", "x_type": "(3,2)"}],
    "default_x_types": {"5": "(3,2)"},
    "theorem_cases": [
        {"route": "cone", "label": "quintic", "y_type": "5", "x_type": "3,2", "cases": [[25, 19]]},
    ],
}


def _write(tmp_path, data) -> str:
    path = tmp_path / "run_config.json"
    path.write_text(json.dumps(data) if not isinstance(data, str) else data, encoding="utf-8")
    return str(path)


def test_default_config(run_config):
    assert len(run_config.rows) == 9
    assert sum(len(entry.cases) for entry in run_config.entries_for(Route.NO_MINUS_TWO)) == 34
    assert sum(len(entry.cases) for entry in run_config.entries_for(Route.CONE)) == 18
    assert run_config.rational_cases == ["cubic_33", "quadric_24"]


def test_y_key_normalizes():
    assert y_key("(4,2)") == "(2,4)"
    assert y_key([2, 4]) == "(2,4)"


def test_row_lookup(run_config):
    assert run_config.row_for("(4,2)").x_degrees == (2, 2, 2)
    assert run_config.row_for("(2,2,3)", "(1,1,2,3)").x_degrees == (3, 2, 1, 1)
    with pytest.raises(ConfigError):
        run_config.row_for("(5)", "(5,1)")


def test_listed_pairs(run_config):
    assert (4, 8) in run_config.listed_pairs("(3,2,2)")
    assert run_config.listed_entry("(2,2,2,2)", 6, 11).route is Route.CONE
    assert run_config.listed_entry("(5)", 1, 1) is None


def test_minimal_config(tmp_path):
    run_config = load_run_config(_write(tmp_path, MINIMAL))
    assert isinstance(run_config, RunConfig)
    assert run_config.default_x_types == {"(5)": (3, 2)}
    assert run_config.output_format == "text"


@pytest.mark.parametrize("mutate", [
    lambda data: data["theorem_cases"][0].update(x_type="(4,1)"),
    lambda data: data["default_x_types"].update({"(2,4)": "(2,2,2)"}),
    lambda data: data["embedding_rows"].append({"y_type": "(2,4)", "x_type": "(3,2)"}),
    lambda data: data["theorem_cases"][0].update(route="table_nine"),
    lambda data: data["theorem_cases"][0].update(cases=[]),
    lambda data: data.update(output_format="xml"),
])
def test_invalid_configs(tmp_path, mutate):
    data = json.loads(json.dumps(MINIMAL))
    mutate(data)
    with pytest.raises(ConfigError):
        load_run_config(_write(tmp_path, data))


def test_broken_json(tmp_path):
    with pytest.raises(ConfigError):
        load_run_config(_write(tmp_path, "{not json"))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_run_config(str(tmp_path / "absent.json"))
