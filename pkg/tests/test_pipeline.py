import pytest

from isolated_curves.models import (
    CheckerError,
    CheckStatus,
    ConfigError,
    DivClass,
    EmbeddingRow,
    H1Reason,
    Route,
)
from isolated_curves.pipeline import (
    RATIONAL_CASES,
    build_tables,
    check_k3_case,
    check_rational_case,
    curve_rr,
    dim_on_A0,
    node_dimension_condition,
    quantities,
    rational_case,
    scan_grid,
    sections_vanish_condition,
    select_row,
)
from tests.table_data import CONE_ROWS, NO_MINUS_TWO_ROWS

K3_CHECKS = [
    "existence",
    "node_bound",
    "nodes_exceed_sections",
    "sections_of_L_minus_a_vanish",
    "restriction_h1_vanishing",
    "restricted_dimension",
    "h1_vanishing",
    "irreducibility_bound",
    "node_dimension_condition",
]


def test_curve_rr():
    assert curve_rr(3, -2) == (0, 4)
    assert curve_rr(3, 6) == (4, 0)
    assert curve_rr(4, 6, canonical=True) == (4, 1)
    assert curve_rr(4, 6) is None
    assert curve_rr(2, 1) is None
    assert curve_rr(0, 0) == (1, 0)
    with pytest.raises(CheckerError):
        curve_rr(-1, 3)


@pytest.mark.parametrize("x_type, expected", [
    ((3, 2), 23),
    ((2, 2, 2), 16),
    ((3, 2, 1), 8),
    ((2, 2, 2, 1), 11),
    ((2, 2, 2, 1, 1), 4),
    ((3, 2, 1, 1), 3),
])
def test_dim_on_node_curve(x_type, expected):
    assert dim_on_A0(EmbeddingRow(x_type)) == expected


def test_quantities_of_quadric_quartic_row():
    q = quantities(EmbeddingRow((2, 2, 2)), 16, 17)
    assert (q.nodes, q.h, q.mu, q.a, q.b) == (32, 8, 5, 2, 2)
    assert q.n_l == 17
    assert q.divisor == DivClass(4, -1)
    assert q.divisor_sq == 22
    assert (q.genus_a, q.degree_a) == (17, 16)


def test_quantities_reject_bad_input():
    with pytest.raises(CheckerError):
        quantities(EmbeddingRow((3, 2)), -1, 18)
    with pytest.raises(CheckerError):
        quantities(EmbeddingRow((3, 2)), 23, 0)


def test_sections_vanish_condition():
    assert sections_vanish_condition(2, 4, 12, 40)
    assert sections_vanish_condition(2, 4, 18, 23)
    assert not sections_vanish_condition(2, 4, 18, 24)


def test_node_dimension_condition():
    assert node_dimension_condition(2, 2, 5, 15)
    assert not node_dimension_condition(2, 2, 5, 16)
    assert node_dimension_condition(3, 2, 4, 22)
    assert not node_dimension_condition(3, 2, 4, 23)


@pytest.mark.parametrize("row", NO_MINUS_TWO_ROWS, ids=lambda row: f"{row[0]}-{row[1]}")
def test_no_minus_two_cases_satisfied(run_config, row):
    g, d, y_type, x_type = row[:4]
    report = check_k3_case(run_config.row_for(y_type, x_type), g, d)
    assert report.satisfied, report.first_failing_check
    assert report.route is Route.NO_MINUS_TWO
    assert report.h1.reason is H1Reason.NO_MINUS_TWO_LATTICE
    assert report.cone is None


@pytest.mark.parametrize("row", CONE_ROWS, ids=lambda row: f"{row[0]}-{row[1]}")
def test_cone_cases_satisfied(run_config, row):
    g, d, y_type, x_type = row[:4]
    report = check_k3_case(run_config.row_for(y_type, x_type), g, d)
    assert report.satisfied, report.first_failing_check
    assert report.route is Route.CONE
    assert report.h1.reason.value == row[-1]
    assert report.cone.ray_left.divisor.as_tuple() == row[4][0]


def test_check_order():
    report = check_k3_case(EmbeddingRow((3, 2)), 25, 19)
    assert [check.name for check in report.checks] == K3_CHECKS
    assert [check.gating for check in report.checks] == [True] * 7 + [False] * 2


def test_too_many_sections_fails_at_node_bound():
    report = check_k3_case(EmbeddingRow((3, 2)), 35, 22)
    assert not report.satisfied
    assert report.first_failing_check == "node_bound"
    assert report.check("existence").status is CheckStatus.PASS


def test_h_not_ample_fails_vanishing():
    # (h, d, c) = (6, 6, 4) has the -2 class H - C orthogonal to H
    report = check_k3_case(EmbeddingRow((3, 2)), 3, 6)
    assert report.check("h1_vanishing").status is CheckStatus.FAIL
    assert report.route is None


def test_invalid_form_leaves_vanishing_unknown():
    report = check_k3_case(EmbeddingRow((3, 2)), 5, 1)
    assert report.check("h1_vanishing").status is CheckStatus.UNKNOWN
    assert report.first_failing_check == "existence"


@pytest.mark.parametrize("case_id", sorted(RATIONAL_CASES))
def test_rational_cases_satisfied(case_id):
    report = check_rational_case(case_id)
    assert report.satisfied, report.first_failing_check
    assert report.route is Route.RATIONAL
    assert (report.g, report.d) == (3, 6)
    assert report.check("irreducibility_bound").passed


def test_rational_case_quantities():
    cubic = check_rational_case("cubic33").quantities
    assert (cubic.nodes, cubic.n_l, cubic.dim_a0, cubic.h) == (12, 9, 8, 3)
    quadric = check_rational_case("quadric_24").quantities
    assert (quadric.nodes, quadric.n_l, quadric.dim_a0, quadric.h) == (18, 15, 14, 2)


def test_unknown_rational_case():
    assert rational_case("Quadric-24") is RATIONAL_CASES["quadric_24"]
    with pytest.raises(ConfigError):
        rational_case("quartic")


def test_select_row(run_config):
    assert select_row(run_config, "(2,2,3)", 4, 8).x_degrees == (3, 2, 1, 1)
    assert select_row(run_config, "(2,2,3)", 11, 16).x_degrees == (2, 2, 2, 1)
    assert select_row(run_config, "(3,2,2)", 30, 30).x_degrees == (2, 2, 2, 1)
    assert select_row(run_config, "5", 23, 18, x_type="(4,1)").x_degrees == (4, 1)


def test_build_tables(run_config):
    rows = build_tables(run_config)
    assert len(rows) == len(NO_MINUS_TWO_ROWS) + len(CONE_ROWS)
    assert [row.route for row in rows].count(Route.NO_MINUS_TWO) == len(NO_MINUS_TWO_ROWS)
    assert [(row.g, row.d) for row in rows] == [row[:2] for row in NO_MINUS_TWO_ROWS + CONE_ROWS]
    assert all(row.ne_rays is None for row in rows[:len(NO_MINUS_TWO_ROWS)])


def test_scan_grid_keeps_input_order(run_config):
    result = scan_grid(run_config, "(5)", range(23, 26), range(18, 21), max_workers=3)
    assert [(cell.g, cell.d) for cell in result.cells] == [(g, d) for g in range(23, 26) for d in range(18, 21)]
    assert result.cell(23, 18).mark == "P"
    assert result.cell(25, 19).mark == "P"
    assert (23, 18) in result.passes
    with pytest.raises(KeyError):
        result.cell(30, 30)


def test_scan_grid_marks(run_config):
    result = scan_grid(run_config, "5", [35], [22])
    assert result.cells[0].mark == "."
    assert result.cells[0].first_failing_check == "node_bound"


def test_scan_grid_empty_and_invalid(run_config):
    assert scan_grid(run_config, "5", range(5, 3), range(1, 4)).cells == ()
    with pytest.raises(CheckerError):
        scan_grid(run_config, "5", [-1], [3])
