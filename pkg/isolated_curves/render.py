"""
输出渲染 - JSON / TSV / 文本

JSON 统一使用 sort_keys + indent=2 + ensure_ascii=False, 解析后再渲染字节不变;
TSV 列顺序固定, 供金标准文件逐字节比对。
"""

import json
from typing import Any, Iterable, Optional, Tuple

from .models import CheckStatus, ConeDesc, CriterionReport, DivClass, GramForm, SolutionSet, format_degrees
from .pipeline import ScanResult, TableRow

TSV_COLUMNS = ("g", "d", "y_type", "x_type", "D", "D_sq", "ne_rays", "nef_gens", "reason")

_STATUS_ICONS = {
    CheckStatus.PASS: "✅",
    CheckStatus.FAIL: "❌",
    CheckStatus.UNKNOWN: "❔",
}


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _coefficient(value: int) -> str:
    if value == 1:
        return ""
    if value == -1:
        return "-"
    return str(value)


def format_class(divisor: DivClass) -> str:
    """xH+yC with unit coefficients omitted: "4H-C", "-H+C", "C", "0"."""
    if divisor.is_zero:
        return "0"
    text = ""
    if divisor.x:
        text = _coefficient(divisor.x) + "H"
    if divisor.y:
        if text and divisor.y > 0:
            text += "+"
        text += _coefficient(divisor.y) + "C"
    return text


def format_pair(pair: Optional[Tuple[DivClass, DivClass]]) -> str:
    if pair is None:
        return "-"
    return ", ".join(format_class(item) for item in pair)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def tables_tsv(rows: Iterable[TableRow]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for row in rows:
        lines.append("\t".join([
            str(row.g),
            str(row.d),
            format_degrees(row.y_type),
            format_degrees(row.x_type),
            format_class(row.divisor),
            str(row.divisor_sq),
            format_pair(row.ne_rays),
            format_pair(row.nef_gens),
            row.reason.value,
        ]))
    return "\n".join(lines) + "\n"


def tables_json(rows: Iterable[TableRow]) -> str:
    return dumps({"rows": [row.to_dict() for row in rows]})


# ---------------------------------------------------------------------------
# cone
# ---------------------------------------------------------------------------

def cone_payload(form: GramForm, cone: ConeDesc, sample: Optional[SolutionSet]) -> dict:
    return {
        "form": form.to_dict(),
        "disc": form.disc,
        "cone": cone.to_dict(),
        "minus_two_sample": [item.to_list() for item in sample.solutions] if sample else [],
        "sample_bound": sample.exhaustive_bound if sample else None,
        "minus_two_representatives": [item.to_list() for item in sample.representatives] if sample else [],
    }


def cone_text(form: GramForm, cone: ConeDesc, sample: Optional[SolutionSet]) -> str:
    lines = [f"📐 Gram 形式: h={form.h}, d={form.d}, c={form.c} (disc={form.disc})"]
    if cone.is_rational:
        lines.append("NE(X): " + ", ".join(
            f"{format_class(ray.divisor)} [{ray.tag.value}]" for ray in cone.rays
        ))
        lines.append("Nef(X): " + format_pair((cone.nef_left, cone.nef_right)))
    else:
        lines.append("无 -2 类; NE(X) = 正锥的闭包 (irrational_light_cone)")
    if sample is not None:
        shown = ", ".join(format_class(item) for item in sample.solutions) or "无"
        lines.append(f"-2 类 (|x| <= {sample.exhaustive_bound}): {shown}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def report_json(report: CriterionReport) -> str:
    return dumps(report.to_dict())


def report_text(report: CriterionReport) -> str:
    q = report.quantities
    icon = "✅" if report.satisfied else "❌"
    lines = [
        f"{icon} {report.subject}: {report.verdict}"
        + (f" (首个失败检查: {report.first_failing_check})" if report.first_failing_check else ""),
        f"   Y={format_degrees(report.y_type)} X={format_degrees(report.x_type)} g={report.g} d={report.d}",
        f"   l={q.nodes} n_L={q.n_l} N={q.dim_a0} a={q.a} b={q.b}"
        + (f" h={q.h}" if q.h is not None else "")
        + (f" mu={q.mu}" if q.mu is not None else ""),
    ]
    if q.divisor is not None:
        lines.append(f"   D={format_class(q.divisor)} D^2={q.divisor_sq}")
    if report.route is not None:
        lines.append(f"   route={report.route.value}")
    for check in report.checks:
        suffix = "" if check.gating else " (info)"
        lines.append(f"   {_STATUS_ICONS[check.status]} {check.name}{suffix}: {check.detail}")
    if report.cone is not None and report.cone.is_rational:
        lines.append("   NE(X): " + format_pair((report.cone.ray_left.divisor, report.cone.ray_right.divisor)))
        lines.append("   Nef(X): " + format_pair((report.cone.nef_left, report.cone.nef_right)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def scan_json(result: ScanResult) -> str:
    return dumps(result.to_dict())


def scan_chart(result: ScanResult) -> str:
    """g 为行, d 为列; P 列出且通过, + 未列出但通过, ! 列出但失败, . 失败"""
    lines = [f"📊 Y={format_degrees(result.y_type)}"]
    if not result.cells:
        lines.append("(空网格)")
        return "\n".join(lines) + "\n"
    width = max(len(str(d)) for d in result.d_values) + 1
    label = max(len(str(g)) for g in result.g_values)
    lines.append(" " * (label + 4) + "".join(str(d).rjust(width) for d in result.d_values))
    for g in result.g_values:
        marks = "".join(result.cell(g, d).mark.rjust(width) for d in result.d_values)
        lines.append(f"g={str(g).rjust(label)}  {marks}")
    lines.append("图例: P 列出且通过, + 未列出但通过, ! 列出但失败, . 失败")
    return "\n".join(lines) + "\n"

