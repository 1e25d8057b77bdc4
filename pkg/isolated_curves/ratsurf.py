"""
Lattice and cohomology numerics on the two rational surfaces.

- dP6: the cubic surface, P^2 blown up at six general points. Classes are
  a l + sum b_i e_i with l^2 = 1, e_i^2 = -1, K = -3l + sum e_i, H = -K.
- P1 x P1: the smooth quadric surface, classes are bidegrees (p, q) with
  (p1, q1).(p2, q2) = p1 q2 + p2 q1, K = (-2, -2), H = (1, 1).

The six points are never coordinatized; everything is lattice arithmetic.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from .models import CheckerError, LatticeError, require_int

LOGGER = logging.getLogger(__name__)

BLOWN_UP_POINTS = 6


class SurfaceKind(str, Enum):
    DP6 = "dp6"
    QUADRIC = "quadric"


@dataclass(frozen=True)
class DP6Class:
    """a l + b_1 e_1 + ... + b_6 e_6"""

    a: int
    b: Tuple[int, ...]

    def __post_init__(self) -> None:
        require_int("a", self.a)
        b = tuple(require_int("b_i", value) for value in self.b)
        if len(b) != BLOWN_UP_POINTS:
            raise LatticeError(f"dP6 类需要 {BLOWN_UP_POINTS} 个例外系数, 实际 {len(b)}")
        object.__setattr__(self, "b", b)

    def __neg__(self) -> "DP6Class":
        return DP6Class(-self.a, tuple(-v for v in self.b))

    def __add__(self, other: "DP6Class") -> "DP6Class":
        return DP6Class(self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: "DP6Class") -> "DP6Class":
        return self + (-other)

    def scaled(self, factor: int) -> "DP6Class":
        return DP6Class(self.a * factor, tuple(v * factor for v in self.b))

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and not any(self.b)

    def to_list(self):
        return [self.a, *self.b]


@dataclass(frozen=True)
class QuadricClass:
    """Bidegree (p, q) on P1 x P1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        require_int("p", self.p)
        require_int("q", self.q)

    def __neg__(self) -> "QuadricClass":
        return QuadricClass(-self.p, -self.q)

    def __add__(self, other: "QuadricClass") -> "QuadricClass":
        return QuadricClass(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "QuadricClass") -> "QuadricClass":
        return QuadricClass(self.p - other.p, self.q - other.q)

    def scaled(self, factor: int) -> "QuadricClass":
        return QuadricClass(self.p * factor, self.q * factor)

    @property
    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def to_list(self):
        return [self.p, self.q]


SurfaceClass = Union[DP6Class, QuadricClass]


def _exceptional(index: int) -> DP6Class:
    return DP6Class(0, tuple(1 if i == index else 0 for i in range(BLOWN_UP_POINTS)))


DP6_LINE = DP6Class(1, (0,) * BLOWN_UP_POINTS)
DP6_EXCEPTIONAL = tuple(_exceptional(i) for i in range(BLOWN_UP_POINTS))
DP6_EXCEPTIONAL_SUM = DP6Class(0, (1,) * BLOWN_UP_POINTS)
DP6_K = DP6Class(-3, (1,) * BLOWN_UP_POINTS)
DP6_H = -DP6_K

# the 27 lines: e_i, l - e_i - e_j, 2l - (sum of five e_k)
DP6_LINES: Tuple[DP6Class, ...] = (
    DP6_EXCEPTIONAL
    + tuple(DP6_LINE - DP6_EXCEPTIONAL[i] - DP6_EXCEPTIONAL[j]
            for i, j in itertools.combinations(range(BLOWN_UP_POINTS), 2))
    + tuple(DP6_LINE.scaled(2) - DP6_EXCEPTIONAL_SUM + DP6_EXCEPTIONAL[i]
            for i in range(BLOWN_UP_POINTS))
)

QUADRIC_H = QuadricClass(1, 1)
QUADRIC_K = QuadricClass(-2, -2)


# ---------------------------------------------------------------------------
# cubic surface
# ---------------------------------------------------------------------------

def dp6_pair(first: DP6Class, second: DP6Class) -> int:
    return first.a * second.a - sum(x * y for x, y in zip(first.b, second.b))


def dp6_is_nef(divisor: DP6Class) -> bool:
    """NE of the cubic surface is spanned by the 27 lines."""
    return all(dp6_pair(divisor, line) >= 0 for line in DP6_LINES)


def dp6_is_ample(divisor: DP6Class) -> bool:
    return all(dp6_pair(divisor, line) > 0 for line in DP6_LINES)


def dp6_h0(divisor: DP6Class) -> Optional[int]:
    """Riemann-Roch value of h^0 for nef classes; None when undetermined."""
    if not dp6_is_nef(divisor):
        return None
    return 1 + (dp6_pair(divisor, divisor) - dp6_pair(divisor, DP6_K)) // 2


def dp6_h0_zero_by_ample_pairing(divisor: DP6Class) -> bool:
    """True certifies h^0 = 0: a nonzero effective class meets the ample H positively."""
    if divisor.is_zero:
        raise LatticeError("零类有截面, 不能用丰富配对排除")
    return dp6_pair(divisor, DP6_H) <= 0


def dp6_h1_vanishes(divisor: DP6Class) -> bool:
    """Kodaira: h^1(D) = 0 when D is nef (D - K ample) or -D is ample."""
    return dp6_is_nef(divisor) or dp6_is_ample(-divisor)


# ---------------------------------------------------------------------------
# quadric surface
# ---------------------------------------------------------------------------

def quadric_pair(first: QuadricClass, second: QuadricClass) -> int:
    return first.p * second.q + second.p * first.q


def quadric_is_ample(divisor: QuadricClass) -> bool:
    return divisor.p > 0 and divisor.q > 0


def _line_h0(degree: int) -> int:
    return degree + 1 if degree >= 0 else 0


def _line_h1(degree: int) -> int:
    return -degree - 1 if degree <= -2 else 0


def quadric_cohomology(p: int, q: int) -> Tuple[int, int, int]:
    """(h^0, h^1, h^2) of O(p, q) by Kunneth from the two factors."""
    h0 = _line_h0(p) * _line_h0(q)
    h1 = _line_h0(p) * _line_h1(q) + _line_h1(p) * _line_h0(q)
    h2 = _line_h1(p) * _line_h1(q)
    return h0, h1, h2


# ---------------------------------------------------------------------------
# curves on either surface
# ---------------------------------------------------------------------------

def _lattice(kind: Union[SurfaceKind, str]):
    try:
        kind = SurfaceKind(kind)
    except ValueError as exc:
        raise CheckerError(f"未知的曲面类型: {kind!r}") from exc
    if kind is SurfaceKind.DP6:
        return DP6Class, dp6_pair, DP6_K, DP6_H
    return QuadricClass, quadric_pair, QUADRIC_K, QUADRIC_H


def _checked(kind, *classes):
    class_type, pairing, canonical, hyperplane = _lattice(kind)
    for item in classes:
        if not isinstance(item, class_type):
            raise LatticeError(f"{item!r} 不是 {class_type.__name__}")
    return pairing, canonical, hyperplane


def surface_pair(kind: Union[SurfaceKind, str], first: SurfaceClass, second: SurfaceClass) -> int:
    pairing, _, _ = _checked(kind, first, second)
    return pairing(first, second)


def section_curve_invariants(kind: Union[SurfaceKind, str], curve: SurfaceClass) -> Tuple[int, int]:
    """(genus, degree) of a smooth curve in the class: 2g - 2 = A^2 + A.K, degree = A.H."""
    pairing, canonical, hyperplane = _checked(kind, curve)
    degree = pairing(curve, hyperplane)
    if degree <= 0:
        raise LatticeError(f"曲线类的次数必须为正, 实际 {degree}")
    twice_genus_minus_two = pairing(curve, curve) + pairing(curve, canonical)
    return twice_genus_minus_two // 2 + 1, degree


def is_canonical_restriction(
    kind: Union[SurfaceKind, str], curve: SurfaceClass, divisor: SurfaceClass
) -> bool:
    """omega_A = O_A(D) via adjunction: A + K = D in the surface lattice."""
    _, canonical, _ = _checked(kind, curve, divisor)
    return curve + canonical == divisor
