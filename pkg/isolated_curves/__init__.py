"""
孤立曲线检验 - 一般 CICY 三维簇中孤立光滑曲线存在性的精确数值检验
"""

from .models import (
    AmplenessError,
    CheckerError,
    ConeError,
    ConfigError,
    CriterionReport,
    DivClass,
    EmbeddingRow,
    GramForm,
    LatticeError,
)

__version__ = "1.0.0"

__all__ = [
    'AmplenessError',
    'CheckerError',
    'ConeError',
    'ConfigError',
    'CriterionReport',
    'DivClass',
    'EmbeddingRow',
    'GramForm',
    'LatticeError',
]
