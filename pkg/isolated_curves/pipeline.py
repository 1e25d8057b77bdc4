"""
End-to-end criterion checker.

For an embedding row and a target (g, d), or for one of the two rational
surface cases, compute the derived quantities and evaluate every numeric
condition of the isolated-curve argument, collecting them in a
CriterionReport. Failures are report content; only invalid input raises.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Sequence, Tuple, Union

from config.settings import get_config

from . import ratsurf
from .cones import effective_cone
from .k3_existence import classify
from .lattice import self_int
from .models import (
    AmplenessError,
    CheckerError,
    CheckResult,
    CheckStatus,
    ConeDesc,
    ConfigError,
    CriterionReport,
    DivClass,
    EmbeddingRow,
    GramForm,
    H1Certificate,
    H1Reason,
    LatticeError,
    PicardType,
    Quantities,
    Route,
    format_degrees,
    normalize_degrees,
    parse_degree_type,
)
from .qform import has_minus_two_class
from .vanishing import h1_no_minus_two, h1_with_cone

if TYPE_CHECKING:
    from config.run_config import RunConfig

LOGGER = logging.getLogger(__name__)


def _status(ok: bool) -> CheckStatus:
    return CheckStatus.PASS if ok else CheckStatus.FAIL


# ---------------------------------------------------------------------------
# numeric building blocks
# ---------------------------------------------------------------------------

def curve_rr(genus: int, degree: int, canonical: bool = False) -> Optional[Tuple[int, int]]:
    """(h^0, h^1) of a degree ``degree`` line bundle on a smooth genus ``genus`` curve.

    Decided only in three regimes: negative degree, degree above 2g-2, and
    the canonical bundle itself. Returns None otherwise.
    """
    if genus < 0:
        raise CheckerError(f"亏格不能为负: {genus}")
    if degree < 0:
        return 0, genus - 1 - degree
    if degree > 2 * genus - 2:
        return degree - genus + 1, 0
    if degree == 2 * genus - 2 and canonical:
        return genus, 1
    return None


def dim_on_A0(row: EmbeddingRow) -> int:  # noqa: N802
    """N = dim |O_{A0}(b)| for a smooth A0 in |aH| (genus a^2 h/2 + 1 by adjunction)."""
    genus = row.a * row.a * row.h // 2 + 1
    h0, _ = curve_rr(genus, row.a * row.b * row.h, canonical=(row.a == row.b))
    return h0 - 1


def quantities(row: EmbeddingRow, g: int, d: int) -> Quantities:
    if g < 0 or d < 1:
        raise CheckerError(f"需要 g >= 0 且 d >= 1, 实际 g={g}, d={d}")
    divisor = DivClass(row.a + row.b, -1)
    # D^2 = (a+b)^2 h - 2(a+b)d + 2g - 2, no validity requirement on the form
    divisor_sq = (row.a + row.b) ** 2 * row.h - 2 * (row.a + row.b) * d + 2 * g - 2
    return Quantities(
        nodes=row.l,
        n_l=g + 1,
        dim_a0=dim_on_A0(row),
        a=row.a,
        b=row.b,
        h=row.h,
        mu=row.mu,
        divisor=divisor,
        divisor_sq=divisor_sq,
        genus_a=row.a * row.a * row.h // 2 + 1,
        degree_a=row.a * row.h,
    )


def sections_vanish_condition(a_r2: int, mu: int, d: int, g: int) -> bool:
    """Sufficient condition for H^0(X, L(-a_{r-2})) = 0."""
    return d <= 2 * a_r2 * (mu - 1) or d * a_r2 > a_r2 * a_r2 * (mu - 1) + g


def node_dimension_condition(a_r3: int, a_r2: int, mu: int, g: int) -> bool:
    """a_{r-2}(2a_{r-3} - a_{r-2})(mu - 1) >= g + 2, or g + 1 when the degrees agree."""
    bound = g + 1 if a_r3 == a_r2 else g + 2
    return a_r2 * (2 * a_r3 - a_r2) * (mu - 1) >= bound


# ---------------------------------------------------------------------------
# K3 rows
# ---------------------------------------------------------------------------

@dataclass
class _LatticeContext:
    form: Optional[GramForm]
    route: Optional[Route] = None
    cone: Optional[ConeDesc] = None
    error: Optional[CheckerError] = None

    def certify(self, divisor: DivClass) -> Tuple[CheckStatus, Optional[H1Certificate], str]:
        if self.error is not None:
            status = CheckStatus.FAIL if isinstance(self.error, AmplenessError) else CheckStatus.UNKNOWN
            return status, None, str(self.error)
        if self.route is Route.NO_MINUS_TWO:
            certificate = h1_no_minus_two(self.form, divisor)
        else:
            certificate = h1_with_cone(self.form, self.cone, divisor)
        status = CheckStatus.PASS if certificate.vanishes else (
            CheckStatus.UNKNOWN if certificate.reason is H1Reason.OUTSIDE_RULES else CheckStatus.FAIL
        )
        detail = f"{certificate.verdict.value} ({certificate.reason.value}): {certificate.detail}"
        return status, certificate, detail


def _lattice_context(row: EmbeddingRow, g: int, d: int) -> _LatticeContext:
    try:
        form = GramForm.for_curve(row.h, d, g)
    except LatticeError as e:
        return _LatticeContext(form=None, error=e)
    try:
        if not has_minus_two_class(form):
            return _LatticeContext(form=form, route=Route.NO_MINUS_TWO)
        return _LatticeContext(form=form, route=Route.CONE, cone=effective_cone(form))
    except AmplenessError as e:
        return _LatticeContext(form=form, error=e)


def check_k3_case(row: EmbeddingRow, g: int, d: int) -> CriterionReport:
    q = quantities(row, g, d)
    existence = classify(row.n_k3, d, g)
    context = _lattice_context(row, g, d)
    LOGGER.debug("%s (g,d)=(%d,%d): route=%s", row.label, g, d, context.route.value if context.route else None)

    checks = [
        CheckResult(
            "existence",
            _status(existence.exists and existence.picard is PicardType.RANK2_HC),
            f"{existence.case.value}, {existence.picard.value}: {existence.detail}",
        ),
        CheckResult("node_bound", _status(q.nodes >= g + 2), f"l={q.nodes}, g+2={g + 2}"),
        CheckResult("nodes_exceed_sections", _status(q.nodes > q.n_l), f"l={q.nodes}, n_L={q.n_l}"),
        CheckResult(
            "sections_of_L_minus_a_vanish",
            _status(sections_vanish_condition(row.a_r2, q.mu, d, g)),
            f"a_r2={row.a_r2}, mu={q.mu}, d={d}, g={g}",
        ),
    ]

    status, _, detail = context.certify(DivClass(row.b - row.a, 0))
    checks.append(CheckResult("restriction_h1_vanishing", status, f"D=(b-a)H: {detail}"))
    checks.append(CheckResult(
        "restricted_dimension", _status(q.nodes <= 2 * q.dim_a0), f"l/2={q.nodes / 2:g}, N={q.dim_a0}",
    ))
    status, certificate, detail = context.certify(q.divisor)
    checks.append(CheckResult("h1_vanishing", status, f"D={q.divisor.as_tuple()}: {detail}"))

    checks.append(CheckResult(
        "irreducibility_bound",
        _status(min(q.n_l, q.nodes - q.n_l) <= q.dim_a0),
        f"min(n_L, l-n_L)={min(q.n_l, q.nodes - q.n_l)}, N={q.dim_a0}",
        gating=False,
    ))
    checks.append(CheckResult(
        "node_dimension_condition",
        _status(node_dimension_condition(row.a_r3, row.a_r2, q.mu, g)),
        f"a_r3={row.a_r3}, a_r2={row.a_r2}, mu={q.mu}, g={g}",
        gating=False,
    ))

    return CriterionReport(
        subject=f"{row.label} (g,d)=({g},{d})",
        y_type=row.y_degrees,
        x_type=row.x_degrees,
        g=g,
        d=d,
        quantities=q,
        checks=checks,
        route=context.route,
        h1=certificate,
        cone=context.cone,
        existence=existence,
    )


# ---------------------------------------------------------------------------
# rational surfaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalCase:
    """A rational surface X in a CICY threefold with the nodal construction data.

    ``nodes`` comes from the construction (the base locus count), not from
    the surface lattice.
    """

    case_id: str
    surface: ratsurf.SurfaceKind
    y_type: Tuple[int, ...]
    x_type: Tuple[int, ...]
    curve_class: ratsurf.SurfaceClass       # L = O_X(C)
    node_curve: ratsurf.SurfaceClass        # A in |aH|
    hyperplane: ratsurf.SurfaceClass
    a: int
    b: int
    m: int
    twists: Tuple[int, ...]
    nodes: int
    target: Tuple[int, int]
    node_curve_invariants: Tuple[int, int]


RATIONAL_CASES: Dict[str, RationalCase] = {
    "cubic_33": RationalCase(
        case_id="cubic_33",
        surface=ratsurf.SurfaceKind.DP6,
        y_type=(3, 3),
        x_type=(3, 1, 1),
        curve_class=ratsurf.DP6_H + ratsurf.DP6_LINE,
        node_curve=ratsurf.DP6_H.scaled(2),
        hyperplane=ratsurf.DP6_H,
        a=2,
        b=2,
        m=3,
        twists=(1, 3),
        nodes=12,
        target=(3, 6),
        node_curve_invariants=(4, 6),
    ),
    "quadric_24": RationalCase(
        case_id="quadric_24",
        surface=ratsurf.SurfaceKind.QUADRIC,
        y_type=(2, 4),
        x_type=(2, 1, 1),
        curve_class=ratsurf.QuadricClass(2, 4),
        node_curve=ratsurf.QuadricClass(3, 3),
        hyperplane=ratsurf.QUADRIC_H,
        a=3,
        b=3,
        m=4,
        twists=(1, 2),
        nodes=18,
        target=(3, 6),
        node_curve_invariants=(4, 6),
    ),
}


def rational_case(case_id: str) -> RationalCase:
    """Look up a case by id; "cubic33" and "cubic_33" both work."""
    wanted = case_id.replace("_", "").replace("-", "").lower()
    for key, case in RATIONAL_CASES.items():
        if key.replace("_", "") == wanted:
            return case
    raise ConfigError(f"未知的有理曲面案例: {case_id!r} (可选: {', '.join(RATIONAL_CASES)})")


def _h0(case: RationalCase, divisor) -> Optional[int]:
    if case.surface is ratsurf.SurfaceKind.DP6:
        return ratsurf.dp6_h0(divisor)
    return ratsurf.quadric_cohomology(divisor.p, divisor.q)[0]


def _h0_vanishes(case: RationalCase, divisor) -> bool:
    if case.surface is ratsurf.SurfaceKind.DP6:
        return not divisor.is_zero and ratsurf.dp6_h0_zero_by_ample_pairing(divisor)
    return ratsurf.quadric_cohomology(divisor.p, divisor.q)[0] == 0


def _h1_vanishes(case: RationalCase, divisor) -> bool:
    if case.surface is ratsurf.SurfaceKind.DP6:
        return ratsurf.dp6_h1_vanishes(divisor)
    return ratsurf.quadric_cohomology(divisor.p, divisor.q)[1] == 0


def _curve_h1(genus: int, degree: int, canonical: bool = False) -> Optional[int]:
    values = curve_rr(genus, degree, canonical)
    return None if values is None else values[1]


def check_rational_case(case_id: Union[str, RationalCase]) -> CriterionReport:
    case = case_id if isinstance(case_id, RationalCase) else rational_case(case_id)
    kind = case.surface
    target = ratsurf.section_curve_invariants(kind, case.curve_class)
    genus_a, degree_a = ratsurf.section_curve_invariants(kind, case.node_curve)
    n_l = _h0(case, case.curve_class)

    twist_b = case.hyperplane.scaled(case.b)
    canonical_b = ratsurf.is_canonical_restriction(kind, case.node_curve, twist_b)
    rr = curve_rr(genus_a, case.b * degree_a, canonical_b)
    dim_a0 = rr[0] - 1 if rr is not None else -1

    l_minus_a = case.curve_class - case.hyperplane.scaled(case.a)
    l_minus_b = case.curve_class - twist_b
    checks = [
        CheckResult("target_curve", _status(target == case.target), f"(g, d)={target}, 期望 {case.target}"),
        CheckResult("node_bound", _status(n_l is not None and case.nodes >= n_l + 1),
                    f"l={case.nodes}, dim|L|+2={None if n_l is None else n_l + 1}"),
        CheckResult("nodes_exceed_sections", _status(n_l is not None and case.nodes > n_l),
                    f"l={case.nodes}, n_L={n_l}"),
        CheckResult("sections_of_L_minus_a_vanish", _status(_h0_vanishes(case, l_minus_a)),
                    f"L-{case.a}H={l_minus_a.to_list()}"),
        CheckResult("node_curve", _status((genus_a, degree_a) == case.node_curve_invariants),
                    f"A={case.node_curve.to_list()}: (g_A, d_A)=({genus_a}, {degree_a})"),
        CheckResult("restricted_dimension", _status(dim_a0 >= 0 and case.nodes <= 2 * dim_a0),
                    f"l/2={case.nodes / 2:g}, N={dim_a0}"),
        CheckResult(
            "h1_vanishing",
            _status(_h0_vanishes(case, l_minus_b) and _h1_vanishes(case, l_minus_b - case.node_curve)),
            f"h0(L-{case.b}H)=0 且 h1(L-{case.b}H-A)=0",
        ),
    ]

    target_g, target_d = case.target
    twist_values = {t: _curve_h1(target_g, t * target_d) for t in case.twists}
    checks.append(CheckResult(
        "normal_twists", _status(all(v == 0 for v in twist_values.values())),
        ", ".join(f"h1(C, O_C({t}))={v}" for t, v in twist_values.items()),
    ))
    twist = case.m - case.b
    canonical = ratsurf.is_canonical_restriction(kind, case.node_curve, case.hyperplane.scaled(twist))
    value = _curve_h1(genus_a, twist * degree_a, canonical)
    checks.append(CheckResult("canonical_twist", _status(value == 1), f"h1(A, O_A({twist}))={value}"))
    value = _curve_h1(genus_a, case.m * degree_a)
    checks.append(CheckResult("top_twist", _status(value == 0), f"h1(A, O_A({case.m}))={value}"))
    if n_l is not None:
        checks.append(CheckResult(
            "irreducibility_bound",
            _status(min(n_l, case.nodes - n_l) <= dim_a0),
            f"min(n_L, l-n_L)={min(n_l, case.nodes - n_l)}, N={dim_a0}",
            gating=False,
        ))

    return CriterionReport(
        subject=case.case_id,
        y_type=case.y_type,
        x_type=case.x_type,
        g=target_g,
        d=target_d,
        quantities=Quantities(
            nodes=case.nodes,
            n_l=n_l if n_l is not None else -1,
            dim_a0=dim_a0,
            a=case.a,
            b=case.b,
            h=ratsurf.surface_pair(kind, case.hyperplane, case.hyperplane),
            genus_a=genus_a,
            degree_a=degree_a,
        ),
        checks=checks,
        route=Route.RATIONAL,
    )


# ---------------------------------------------------------------------------
# run-config driven operations
# ---------------------------------------------------------------------------

def select_row(run_config: "RunConfig", y_type, g: int, d: int, x_type=None) -> EmbeddingRow:
    """X type: explicit override, else the listed case's row, else the default for Y."""
    if x_type is not None:
        return run_config.row_for(y_type, x_type)
    entry = run_config.listed_entry(y_type, g, d)
    if entry is not None:
        return run_config.row_for(entry.y_type, entry.x_type)
    return run_config.row_for(y_type)


@dataclass(frozen=True)
class TableRow:
    route: Route
    g: int
    d: int
    y_type: Tuple[int, ...]
    x_type: Tuple[int, ...]
    divisor: DivClass
    divisor_sq: int
    reason: H1Reason
    ne_rays: Optional[Tuple[DivClass, DivClass]] = None
    nef_gens: Optional[Tuple[DivClass, DivClass]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "route": self.route.value,
            "g": self.g,
            "d": self.d,
            "y_type": list(self.y_type),
            "x_type": list(self.x_type),
            "D": self.divisor.to_list(),
            "D_sq": self.divisor_sq,
            "ne_rays": [r.to_list() for r in self.ne_rays] if self.ne_rays else None,
            "nef_gens": [n.to_list() for n in self.nef_gens] if self.nef_gens else None,
            "reason": self.reason.value,
        }


def _table_row(route: Route, row: EmbeddingRow, g: int, d: int) -> TableRow:
    form = GramForm.for_curve(row.h, d, g)
    divisor = DivClass(row.a + row.b, -1)
    if route is Route.NO_MINUS_TWO:
        return TableRow(route, g, d, row.y_degrees, row.x_degrees, divisor, self_int(form, divisor),
                        h1_no_minus_two(form, divisor).reason)
    cone = effective_cone(form)
    rays = (cone.ray_left.divisor, cone.ray_right.divisor) if cone.is_rational else None
    nef = (cone.nef_left, cone.nef_right) if cone.is_rational else None
    return TableRow(route, g, d, row.y_degrees, row.x_degrees, divisor, self_int(form, divisor),
                    h1_with_cone(form, cone, divisor).reason, rays, nef)


def build_tables(run_config: "RunConfig") -> List[TableRow]:
    """Rows of the no-(-2) table, then the cone table, each in case-list order."""
    rows = []
    for route in (Route.NO_MINUS_TWO, Route.CONE):
        for entry in run_config.entries_for(route):
            row = run_config.row_for(entry.y_type, entry.x_type)
            rows.extend(_table_row(route, row, g, d) for g, d in entry.cases)
    LOGGER.debug("表格共 %d 行", len(rows))
    return rows


# ---------------------------------------------------------------------------
# grid scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanCell:
    g: int
    d: int
    x_type: Tuple[int, ...]
    listed: bool
    satisfied: bool
    first_failing_check: Optional[str]

    @property
    def mark(self) -> str:
        if self.satisfied:
            return "P" if self.listed else "+"
        return "!" if self.listed else "."

    def to_dict(self) -> Dict[str, Any]:
        return {
            "g": self.g,
            "d": self.d,
            "x_type": list(self.x_type),
            "listed": self.listed,
            "satisfied": self.satisfied,
            "first_failing_check": self.first_failing_check,
            "mark": self.mark,
        }


@dataclass(frozen=True)
class ScanResult:
    y_type: Tuple[int, ...]
    g_values: Tuple[int, ...]
    d_values: Tuple[int, ...]
    cells: Tuple[ScanCell, ...]

    def cell(self, g: int, d: int) -> ScanCell:
        for item in self.cells:
            if (item.g, item.d) == (g, d):
                return item
        raise KeyError((g, d))

    @property
    def passes(self) -> List[Tuple[int, int]]:
        return [(c.g, c.d) for c in self.cells if c.satisfied]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "y_type": list(self.y_type),
            "g_values": list(self.g_values),
            "d_values": list(self.d_values),
            "cells": [c.to_dict() for c in self.cells],
        }


def _scan_cell(run_config: "RunConfig", y_type, g: int, d: int, x_type, listed: bool) -> ScanCell:
    row = select_row(run_config, y_type, g, d, x_type)
    report = check_k3_case(row, g, d)
    return ScanCell(g, d, row.x_degrees, listed, report.satisfied, report.first_failing_check)


def scan_grid(
    run_config: "RunConfig",
    y_type,
    g_range: Sequence[int],
    d_range: Sequence[int],
    *,
    x_type=None,
    max_workers: Optional[int] = None,
) -> ScanResult:
    """Check every (g, d) of the grid; cells come back in g-major input order."""
    y_degrees = normalize_degrees(parse_degree_type(y_type))
    g_values, d_values = tuple(g_range), tuple(d_range)
    if any(g < 0 for g in g_values) or any(d < 1 for d in d_values):
        raise CheckerError("扫描范围需要 g >= 0, d >= 1")
    listed = run_config.listed_pairs(y_degrees)
    tasks = [(g, d) for g in g_values for d in d_values]
    workers = max_workers or get_config()['scan']['max_workers']
    cells: Dict[Tuple[int, int], ScanCell] = {}

    if tasks:
        LOGGER.info("开始扫描 Y=%s: %d 个 (g, d)", format_degrees(y_degrees), len(tasks))
        with ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_task = {
                executor.submit(_scan_cell, run_config, y_degrees, g, d, x_type, (g, d) in listed): (g, d)
                for g, d in tasks
            }
            for future in as_completed(future_to_task):
                cells[future_to_task[future]] = future.result()
        LOGGER.info("扫描完成: %d 个通过", sum(1 for c in cells.values() if c.satisfied))

    return ScanResult(y_degrees, g_values, d_values, tuple(cells[task] for task in tasks))
