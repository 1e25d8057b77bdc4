#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
孤立曲线检验 - 命令行入口

对一般 CICY 三维簇中孤立光滑曲线的构造, 逐项精确验证其数值条件:
K3 曲面 Picard 格上的 -2 类、有效锥与 nef 锥、H^1 消失性、存在性分类,
以及两个有理曲面情形。

使用方法：
    python main.py cone H2 HC C2
    python main.py check --y 5 --g 23 --d 18
    python main.py check --rational cubic33
    python main.py tables [--format tsv|json]
    python main.py scan --y 5 --g 20..30 --d 17..22

退出码：0 通过/成功, 1 判据不满足, 2 输入非法
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# 添加项目路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from config import get_config, load_run_config, setup_logging
from isolated_curves import render
from isolated_curves.cones import effective_cone
from isolated_curves.models import CheckerError, GramForm, parse_degree_type
from isolated_curves.pipeline import build_tables, check_k3_case, check_rational_case, scan_grid, select_row
from isolated_curves.qform import minus_two_classes_bounded

EXIT_OK = 0
EXIT_CRITERION_FAILED = 1
EXIT_INVALID_INPUT = 2

logger = logging.getLogger(__name__)


def _status(message: str):
    """状态行写到 stderr, stdout 只留给 TSV/JSON/文本结果"""
    print(message, file=sys.stderr)


def parse_range(text: str) -> range:
    """"A..B" 为闭区间, "A" 为单点; A > B 时为空区间"""
    try:
        if '..' in text:
            low, high = text.split('..', 1)
            return range(int(low), int(high) + 1)
        value = int(text)
        return range(value, value + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"无法解析区间: {text!r} (应为 A..B)")


def _degree_type(text: str):
    try:
        return parse_degree_type(text)
    except CheckerError as e:
        raise argparse.ArgumentTypeError(str(e))


# ---------------------------------------------------------------------------
# 子命令
# ---------------------------------------------------------------------------

def cmd_cone(args) -> int:
    form = GramForm(args.h2, args.hc, args.c2)
    cone = effective_cone(form)
    sample = minus_two_classes_bounded(form, get_config()['cone']['sample_bound'])
    if args.format == 'json':
        sys.stdout.write(render.dumps(render.cone_payload(form, cone, sample)))
    else:
        sys.stdout.write(render.cone_text(form, cone, sample))
    return EXIT_OK


def cmd_check(args) -> int:
    run_config = load_run_config(args.config)
    output_format = args.format or run_config.output_format
    if args.rational:
        report = check_rational_case(args.rational)
    else:
        if args.g is None or args.d is None:
            _status("❌ --y 需要同时给出 --g 和 --d")
            return EXIT_INVALID_INPUT
        row = select_row(run_config, args.y, args.g, args.d, args.x)
        report = check_k3_case(row, args.g, args.d)

    if output_format == 'json':
        sys.stdout.write(render.report_json(report))
    else:
        sys.stdout.write(render.report_text(report))
    return EXIT_OK if report.satisfied else EXIT_CRITERION_FAILED


def cmd_tables(args) -> int:
    run_config = load_run_config(args.config)
    rows = build_tables(run_config)
    if args.format == 'json':
        sys.stdout.write(render.tables_json(rows))
    else:
        sys.stdout.write(render.tables_tsv(rows))
    return EXIT_OK


def cmd_scan(args) -> int:
    run_config = load_run_config(args.config)
    _status(f"📊 扫描 Y={args.y}: g∈[{args.g.start},{args.g.stop - 1}], d∈[{args.d.start},{args.d.stop - 1}]")
    result = scan_grid(run_config, args.y, args.g, args.d, x_type=args.x, max_workers=args.workers)
    if args.format == 'json':
        sys.stdout.write(render.scan_json(result))
    else:
        sys.stdout.write(render.scan_chart(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='孤立曲线检验 - CICY 三维簇中孤立光滑曲线的精确数值检验',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例用法:
  python main.py cone 6 19 48
  python main.py check --y 5 --g 25 --d 19
  python main.py check --rational quadric24 --format json
  python main.py tables > tables.tsv
  python main.py scan --y "(2,2,2,2)" --g 4..6 --d 9..11
        """
    )
    parser.add_argument('--config', type=str, default=None, help='运行配置 JSON 路径（默认：config/default_run_config.json）')
    parser.add_argument('--verbose', '-v', action='store_true', help='输出调试日志')
    subparsers = parser.add_subparsers(dest='command', required=True)

    cone = subparsers.add_parser('cone', help='计算 Gram 形式 (H^2, H.C, C^2) 的有效锥与 nef 锥')
    cone.add_argument('h2', type=int, help='H^2')
    cone.add_argument('hc', type=int, help='H.C')
    cone.add_argument('c2', type=int, help='C^2')
    cone.add_argument('--format', choices=['text', 'json'], default='text')
    cone.set_defaults(handler=cmd_cone)

    check = subparsers.add_parser('check', help='检验单个 (Y, g, d) 或有理曲面情形')
    target = check.add_mutually_exclusive_group(required=True)
    target.add_argument('--y', type=_degree_type, help='CICY 类型, 如 5、(2,4)、2,2,3')
    target.add_argument('--rational', type=str, metavar='{cubic33,quadric24}', help='有理曲面情形')
    check.add_argument('--g', type=int, help='亏格')
    check.add_argument('--d', type=int, help='次数')
    check.add_argument('--x', type=_degree_type, help='指定 K3 类型 X（默认按案例表/默认表选取）')
    check.add_argument('--format', choices=['text', 'json'], default=None)
    check.set_defaults(handler=cmd_check)

    tables = subparsers.add_parser('tables', help='重现无 -2 类表与锥表')
    tables.add_argument('--format', choices=['tsv', 'json'], default='tsv')
    tables.set_defaults(handler=cmd_tables)

    scan = subparsers.add_parser('scan', help='在 (g, d) 网格上扫描')
    scan.add_argument('--y', type=_degree_type, required=True, help='CICY 类型')
    scan.add_argument('--g', type=parse_range, required=True, help='亏格区间 A..B')
    scan.add_argument('--d', type=parse_range, required=True, help='次数区间 A..B')
    scan.add_argument('--x', type=_degree_type, help='固定 K3 类型 X')
    scan.add_argument('--workers', type=int, default=None, help='并发线程数')
    scan.add_argument('--format', choices=['text', 'json'], default='text')
    scan.set_defaults(handler=cmd_scan)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID_INPUT

    setup_logging(logging.DEBUG if args.verbose else None)

    try:
        return args.handler(args)
    except CheckerError as e:
        _status(f"❌ 输入非法: {e}")
        return EXIT_INVALID_INPUT
    except KeyboardInterrupt:
        _status("\n⚠️  用户中断操作")
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
