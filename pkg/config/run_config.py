"""
运行配置 - 嵌入表、定理案例列表、默认 X 类型

JSON 文件经 pydantic 校验后得到 RunConfig; 校验失败统一转换为 ConfigError。
"""

import json
import logging
import os
from typing import Dict, List, Literal, Optional, Set, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from isolated_curves.models import (
    ConfigError,
    EmbeddingRow,
    Route,
    format_degrees,
    normalize_degrees,
    parse_degree_type,
)

from .settings import get_config

logger = logging.getLogger(__name__)

DegreeType = Tuple[int, ...]


def _y_degrees(value) -> DegreeType:
    return normalize_degrees(parse_degree_type(value))


def y_key(y_type) -> str:
    """Y 类型的规范字符串, "(4,2)" 与 "2,4" 都变成 "(2,4)" """
    return format_degrees(normalize_degrees(parse_degree_type(y_type)))


class EmbeddingRowConfig(BaseModel):
    """嵌入表中的一行: Y 中的 K3 类型 X"""
    y_type: DegreeType = Field(..., description="CICY 三维簇类型 (排序后存储)")
    x_type: DegreeType = Field(..., description="K3 曲面类型 (保持表中顺序)")

    @field_validator('y_type', mode='before')
    @classmethod
    def _parse_y(cls, value):
        return _y_degrees(value)

    @field_validator('x_type', mode='before')
    @classmethod
    def _parse_x(cls, value):
        return parse_degree_type(value)

    def to_row(self) -> EmbeddingRow:
        return EmbeddingRow(self.x_type, self.y_type)


class TheoremCaseList(BaseModel):
    """一组已知成立的 (g, d), 共用同一嵌入行"""
    route: Route = Field(..., description="消失性论证路线: no_minus_two 或 cone")
    label: str = Field(..., min_length=1, description="人读标签")
    y_type: DegreeType
    x_type: DegreeType
    cases: List[Tuple[int, int]] = Field(..., min_length=1, description="(g, d) 列表")

    @field_validator('y_type', mode='before')
    @classmethod
    def _parse_y(cls, value):
        return _y_degrees(value)

    @field_validator('x_type', mode='before')
    @classmethod
    def _parse_x(cls, value):
        return parse_degree_type(value)


class RunConfig(BaseModel):
    embedding_rows: List[EmbeddingRowConfig] = Field(..., min_length=1)
    default_x_types: Dict[str, DegreeType] = Field(default_factory=dict, description="Y 类型 -> 未列出时使用的 X 类型")
    theorem_cases: List[TheoremCaseList] = Field(default_factory=list)
    rational_cases: List[str] = Field(default_factory=list)
    output_format: Literal['json', 'tsv', 'text'] = 'text'

    @field_validator('default_x_types', mode='before')
    @classmethod
    def _normalize_defaults(cls, value):
        if not isinstance(value, dict):
            raise ValueError("default_x_types 必须是对象")
        return {y_key(key): parse_degree_type(x) for key, x in value.items()}

    @model_validator(mode='after')
    def _check_rows(self):
        rows = [item.to_row() for item in self.embedding_rows]
        known = {(row.y_degrees, row.x_degrees) for row in rows}
        for key, x_type in self.default_x_types.items():
            y_type = parse_degree_type(key)
            if (y_type, x_type) not in known:
                raise ValueError(f"默认 X 类型 {x_type} 不在 Y={key} 的嵌入行中")
        for entry in self.theorem_cases:
            if (entry.y_type, entry.x_type) not in known:
                raise ValueError(f"案例组 {entry.label} 的 X 类型 {entry.x_type} 不在 Y={entry.y_type} 的嵌入行中")
        return self

    # ------------------------------------------------------------------
    # 查询
    # ------------------------------------------------------------------

    @property
    def rows(self) -> List[EmbeddingRow]:
        return [item.to_row() for item in self.embedding_rows]

    def row_for(self, y_type, x_type=None) -> EmbeddingRow:
        """按 (Y, X) 取嵌入行; X 缺省时取列出的案例或 default_x_types"""
        y_degrees = normalize_degrees(parse_degree_type(y_type))
        if x_type is None:
            key = format_degrees(y_degrees)
            if key not in self.default_x_types:
                raise ConfigError(f"Y={key} 没有默认 X 类型")
            x_type = self.default_x_types[key]
        x_degrees = parse_degree_type(x_type)
        for row in self.rows:
            if row.y_degrees == y_degrees and row.x_degrees == x_degrees:
                return row
        # 次数顺序不同但集合相同时, 采用表中的顺序
        for row in self.rows:
            if row.y_degrees == y_degrees and sorted(row.x_degrees) == sorted(x_degrees):
                return row
        raise ConfigError(f"嵌入表中没有 Y={format_degrees(y_degrees)} X={format_degrees(x_degrees)}")

    def listed_entry(self, y_type, g: int, d: int) -> Optional[TheoremCaseList]:
        y_degrees = normalize_degrees(parse_degree_type(y_type))
        for entry in self.theorem_cases:
            if entry.y_type == y_degrees and (g, d) in entry.cases:
                return entry
        return None

    def listed_pairs(self, y_type) -> Set[Tuple[int, int]]:
        y_degrees = normalize_degrees(parse_degree_type(y_type))
        return {pair for entry in self.theorem_cases if entry.y_type == y_degrees for pair in entry.cases}

    def entries_for(self, route: Route) -> List[TheoremCaseList]:
        return [entry for entry in self.theorem_cases if entry.route is route]


def load_run_config(path: Optional[str] = None) -> RunConfig:
    """读取并校验运行配置; path 为空时使用 SYSTEM_CONFIG['run_config']['path']"""
    path = path or get_config()['run_config']['path']
    if not os.path.exists(path):
        raise ConfigError(f"运行配置文件不存在: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"运行配置不是合法 JSON: {path}: {e}") from e

    try:
        run_config = RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"运行配置校验失败: {path}\n{e}") from e

    logger.debug("加载运行配置: %s (%d 行嵌入表, %d 组案例)",
                 path, len(run_config.embedding_rows), len(run_config.theorem_cases))
    return run_config
