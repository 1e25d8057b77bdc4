"""
K3 曲面上光滑曲线的存在性判定

给定 (n, d, g): 是否存在 P^{n+1} 中 2n 次 K3 曲面 X, 含 d 次亏格 g 的光滑曲线 C,
以及 Pic X 的结构. 所有与 d^2/4n 的比较都化成整数交叉相乘.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Tuple

from .models import CheckerError, ExistenceCase, ExistenceVerdict, PicardType

LOGGER = logging.getLogger(__name__)


def _divides(divisor: int, value: int) -> bool:
    return divisor != 0 and value % divisor == 0


def _case_i_witness(n: int, d: int) -> Optional[Tuple[int, int]]:
    """(k, m) with n = k^2 m, (k, m) != (2, 1) and 2n | kd."""
    for k in range(1, math.isqrt(n) + 1):
        if n % (k * k):
            continue
        m = n // (k * k)
        if (k, m) != (2, 1) and (k * d) % (2 * n) == 0:
            return k, m
    return None


def _case_ii_exception(n: int, d: int, g: int) -> Optional[ExistenceCase]:
    modulus = 2 * n
    residue = d % modulus
    excess = d * d - 4 * n * (g - 1)
    if residue in {1 % modulus, (modulus - 1) % modulus, 2 % modulus, (modulus - 2) % modulus}:
        return ExistenceCase.EXCLUDED_II_A
    if excess == 1 and residue in {(n + 1) % modulus, (n - 1) % modulus}:
        return ExistenceCase.EXCLUDED_II_B
    if excess == n and residue == n % modulus:
        return ExistenceCase.EXCLUDED_II_C
    if excess == 1 and (_divides(d - 1, modulus) or _divides(d + 1, modulus)):
        return ExistenceCase.EXCLUDED_II_D
    return None


def classify(n: int, d: int, g: int) -> ExistenceVerdict:
    """按 (i) -> (iv) 的顺序判定, 恰好一个标签成立"""
    if n < 2:
        raise CheckerError(f"需要 n >= 2, 实际 n={n}")
    if d < 1 or g < 0:
        raise CheckerError(f"需要 d >= 1 且 g >= 0, 实际 d={d}, g={g}")

    square = d * d
    lower = 4 * n * (g - 1)   # 4n(g-1) 对比 d^2
    upper = 4 * n * g         # 4ng 对比 d^2

    if lower == square:
        witness = _case_i_witness(n, d)
        if witness is None:
            return ExistenceVerdict(False, ExistenceCase.EXCLUDED_NONE_FIT, PicardType.NOT_APPLICABLE,
                                    "g = d^2/4n + 1 但不存在 (k, m)")
        k, m = witness
        return ExistenceVerdict(True, ExistenceCase.CASE_I, PicardType.RANK1_CASE_I,
                                f"n = {k}^2 * {m}, Pic X = Z H/{k}")
    if lower > square:
        return ExistenceVerdict(False, ExistenceCase.EXCLUDED_NONE_FIT, PicardType.NOT_APPLICABLE,
                                "g > d^2/4n + 1")
    if upper > square:
        exception = _case_ii_exception(n, d, g)
        if exception is not None:
            LOGGER.debug("(n, d, g)=(%d, %d, %d) 命中例外 %s", n, d, g, exception.value)
            return ExistenceVerdict(False, exception, PicardType.NOT_APPLICABLE, "情形 (ii) 的例外")
        return ExistenceVerdict(True, ExistenceCase.CASE_II, PicardType.RANK2_HC, "d^2/4n < g < d^2/4n + 1")
    if upper == square:
        if d % (2 * n) == 0:
            return ExistenceVerdict(False, ExistenceCase.EXCLUDED_NONE_FIT, PicardType.NOT_APPLICABLE,
                                    "g = d^2/4n 但 2n | d")
        return ExistenceVerdict(True, ExistenceCase.CASE_III, PicardType.RANK2_HC, "g = d^2/4n")
    if (d, g) == (2 * n + 1, n + 1):
        return ExistenceVerdict(False, ExistenceCase.EXCLUDED_IV_PAIR, PicardType.NOT_APPLICABLE,
                                "(d, g) = (2n+1, n+1)")
    return ExistenceVerdict(True, ExistenceCase.CASE_IV, PicardType.RANK2_HC, "g < d^2/4n")
