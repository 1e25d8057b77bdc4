"""
Exact arithmetic on the rank-2 lattice Pic X = ZH + ZC.

Python integers are unbounded, so none of these functions can overflow.
Ray comparisons use the sign of a 2x2 determinant instead of slopes.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, List, Tuple

from .models import DivClass, GramForm, LatticeError

H_CLASS = DivClass(1, 0)
C_CLASS = DivClass(0, 1)


def pair(form: GramForm, first: DivClass, second: DivClass) -> int:
    return (
        form.h * first.x * second.x
        + form.d * (first.x * second.y + second.x * first.y)
        + form.c * first.y * second.y
    )


def self_int(form: GramForm, divisor: DivClass) -> int:
    return pair(form, divisor, divisor)


def h_degree(form: GramForm, divisor: DivClass) -> int:
    """D.H, the degree of D in the embedding given by H."""
    return pair(form, divisor, H_CLASS)


def _half_square(form: GramForm, divisor: DivClass) -> int:
    square = self_int(form, divisor)
    if square % 2:
        raise LatticeError(
            f"自交数 {square} 为奇数: Gram 形式 (h={form.h}, c={form.c}) 不是偶格"
        )
    return square // 2


def chi(form: GramForm, divisor: DivClass) -> int:
    """K3 Riemann-Roch: chi(O_X(D)) = 2 + D^2/2."""
    return 2 + _half_square(form, divisor)


def genus_of_class(form: GramForm, divisor: DivClass) -> int:
    """Arithmetic genus by adjunction with K_X = 0."""
    return _half_square(form, divisor) + 1


def primitive(divisor: DivClass) -> Tuple[DivClass, int]:
    if divisor.is_zero:
        raise LatticeError("零类没有本原部分")
    k = math.gcd(divisor.x, divisor.y)
    return DivClass(divisor.x // k, divisor.y // k), k


def cross(first: DivClass, second: DivClass) -> int:
    """Positive iff ``second`` lies counterclockwise of ``first`` (within a half turn)."""
    return first.x * second.y - second.x * first.y


def _half_plane(divisor: DivClass) -> int:
    if divisor.y > 0 or (divisor.y == 0 and divisor.x > 0):
        return 0
    return 1


def _compare_angle(first: DivClass, second: DivClass) -> int:
    upper, lower = _half_plane(first), _half_plane(second)
    if upper != lower:
        return -1 if upper < lower else 1
    turn = cross(first, second)
    if turn:
        return -1 if turn > 0 else 1
    norm_first = first.x * first.x + first.y * first.y
    norm_second = second.x * second.x + second.y * second.y
    return (norm_first > norm_second) - (norm_first < norm_second)


def sort_by_angle(classes: Iterable[DivClass]) -> List[DivClass]:
    """Sort classes counterclockwise starting from the ray of H."""
    return sorted(classes, key=functools.cmp_to_key(_compare_angle))
