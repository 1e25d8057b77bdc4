"""
Exact solver for Q(x, y) = h x^2 + 2d xy + c y^2 on the values -2 and 0.

Non-square discriminant: walk the river of the topograph. The form is first
moved to a river edge (a basis u, v with Q(u) > 0 > Q(v)); walking the river
visits every face adjacent to it and is periodic. A negative value can only be
taken next to the river (values climb away from it), so -2 is represented iff
it shows up on the negative bank of one period. The basis change of one period
generates the automorphisms acting on the -2 classes.

Square discriminant: Q factors over Z after scaling by h, and the
representations of a nonzero target are read off the divisors of h*target.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from sympy import divisors, integer_nthroot

from config.settings import get_config

from .lattice import C_CLASS, H_CLASS, cross, h_degree, primitive, self_int, sort_by_angle
from .models import AmplenessError, DivClass, GramForm, LatticeError, Side, SolutionSet

LOGGER = logging.getLogger(__name__)

MINUS_TWO = -2

Matrix = Tuple[int, int, int, int]  # row-major 2x2


def square_root(n: int) -> Optional[int]:
    if n < 0:
        return None
    root, exact = integer_nthroot(n, 2)
    return int(root) if exact else None


@dataclass(frozen=True)
class RiverPeriod:
    """One period of the river of a form with non-square discriminant.

    ``reduced`` is (Q(u), 2B(u, v), Q(v)) at the starting edge.
    ``negative_bank`` / ``positive_bank`` are the faces met in one period.
    ``automorph`` maps the starting edge (u, v) to the edge one period later.
    """

    reduced: Tuple[int, int, int]
    negative_bank: Tuple[DivClass, ...]
    positive_bank: Tuple[DivClass, ...]
    automorph: Matrix
    steps: int


def _apply(matrix: Matrix, divisor: DivClass) -> DivClass:
    return DivClass(
        matrix[0] * divisor.x + matrix[1] * divisor.y,
        matrix[2] * divisor.x + matrix[3] * divisor.y,
    )


def _inverse(matrix: Matrix) -> Matrix:
    # det = 1
    return (matrix[3], -matrix[1], -matrix[2], matrix[0])


def _transfer(u0: DivClass, v0: DivClass, u1: DivClass, v1: DivClass) -> Matrix:
    """Matrix sending u0 -> u1 and v0 -> v1 (both bases unimodular)."""
    det = u0.x * v0.y - v0.x * u0.y
    if det not in (1, -1):
        raise LatticeError(f"基变换不是幺模的 (det={det})")
    return (
        det * (u1.x * v0.y - v1.x * u0.y),
        det * (v1.x * u0.x - u1.x * v0.x),
        det * (u1.y * v0.y - v1.y * u0.y),
        det * (v1.y * u0.x - u1.y * v0.x),
    )


def _centered_shift(a: int, b: int) -> int:
    """t with b + 2at in [-|a|, |a|)."""
    span = abs(a)
    centered = (b + span) % (2 * span) - span
    return (centered - b) // (2 * a)


def _river_edge(form: GramForm) -> Tuple[Tuple[int, int, int], DivClass, DivClass]:
    a, b, c = form.h, 2 * form.d, form.c
    u, v = H_CLASS, C_CLASS
    while a * c > 0:
        if abs(c) < abs(a):
            a, b, c = c, -b, a
            u, v = v, -u
        shift = _centered_shift(a, b)
        if shift:
            b, c = b + 2 * a * shift, a * shift * shift + b * shift + c
            v = v + u.scaled(shift)
    if a * c == 0:
        raise LatticeError(f"判别式 {form.disc} 为平方数, 二次型没有河流")
    if a < 0:
        a, b, c = c, -b, a
        u, v = v, -u
    return (a, b, c), u, v


@functools.lru_cache(maxsize=4096)
def river_period(form: GramForm) -> RiverPeriod:
    if square_root(form.disc) is not None:
        raise LatticeError(f"判别式 {form.disc} 为平方数, 二次型没有河流")
    limit = get_config()['qform']['max_river_steps']

    start, u, v = _river_edge(form)
    u0, v0 = u, v
    a, b, c = start
    negatives, positives = [v], [u]
    steps = 0
    while True:
        value = a + b + c
        if value > 0:
            a, b = value, b + 2 * c
            u = u + v
            positives.append(u)
        else:
            b, c = 2 * a + b, value
            v = u + v
            negatives.append(v)
        steps += 1
        if (a, b, c) == start:
            break
        if steps >= limit:
            raise RuntimeError(f"河流在 {limit} 步内没有回到起点: {form}")

    LOGGER.debug("河流周期: form=%s, 步数=%d, 负岸=%d", form.to_dict(), steps, len(negatives) - 1)
    # the last face on each bank is the image of the first one
    return RiverPeriod(
        reduced=start,
        negative_bank=tuple(negatives[:-1]),
        positive_bank=tuple(positives[:-1]),
        automorph=_transfer(u0, v0, u, v),
        steps=steps,
    )


def _split_representations(form: GramForm, target: int, root: int) -> List[DivClass]:
    """All solutions of Q = target != 0 when disc = root^2.

    h Q = (hx + (d+root) y)(hx + (d-root) y); the first factor runs over the
    divisors of h*target.
    """
    product = form.h * target
    found = set()
    for positive in divisors(abs(product)):
        for first in (int(positive), -int(positive)):
            second = product // first
            numerator = first - second
            if numerator % (2 * root):
                continue
            y = numerator // (2 * root)
            rest = first - (form.d + root) * y
            if rest % form.h:
                continue
            candidate = DivClass(rest // form.h, y)
            if self_int(form, candidate) == target:
                found.add(candidate)
    return sort_by_angle(found)


def has_minus_two_class(form: GramForm) -> bool:
    root = square_root(form.disc)
    if root is not None:
        return bool(_split_representations(form, MINUS_TWO, root))
    return any(self_int(form, face) == MINUS_TWO for face in river_period(form).negative_bank)


def _orient(form: GramForm, divisor: DivClass) -> DivClass:
    degree = h_degree(form, divisor)
    if degree > 0 or (degree == 0 and divisor.y > 0):
        return divisor
    return -divisor


def _effective(form: GramForm, divisor: DivClass) -> DivClass:
    degree = h_degree(form, divisor)
    if degree == 0:
        raise AmplenessError(
            f"-2 类 {divisor.as_tuple()} 与 H 正交: H 在 {form.to_dict()} 上不是丰富的"
        )
    return divisor if degree > 0 else -divisor


def minus_two_orbit_representatives(form: GramForm) -> Tuple[DivClass, ...]:
    """One class per automorphism orbit of -2 classes (every class if the orbits are finite)."""
    root = square_root(form.disc)
    if root is not None:
        classes = _split_representations(form, MINUS_TWO, root)
    else:
        classes = [face for face in river_period(form).negative_bank if self_int(form, face) == MINUS_TWO]
    return tuple(sort_by_angle({_orient(form, item) for item in classes}))


def _solve_for_y(form: GramForm, x: int, target: int) -> List[DivClass]:
    # c y^2 + 2dx y + (h x^2 - target) = 0
    constant = form.h * x * x - target
    if form.c == 0:
        slope = 2 * form.d * x
        if slope == 0 or constant % slope:
            return []
        candidates = {-constant // slope}
    else:
        root = square_root(form.d * form.d * x * x - form.c * constant)
        if root is None:
            return []
        candidates = {
            (-form.d * x + sign * root) // form.c
            for sign in (1, -1)
            if (-form.d * x + sign * root) % form.c == 0
        }
    return [DivClass(x, y) for y in candidates if self_int(form, DivClass(x, y)) == target]


def minus_two_classes_bounded(form: GramForm, x_bound: int) -> SolutionSet:
    if x_bound < 1:
        raise LatticeError(f"x_bound 必须 >= 1, 实际为 {x_bound}")
    found = set()
    for x in range(-x_bound, x_bound + 1):
        found.update(_solve_for_y(form, x, MINUS_TWO))
    return SolutionSet(
        target=MINUS_TWO,
        solutions=tuple(sort_by_angle(found)),
        exhaustive_bound=x_bound,
        representatives=minus_two_orbit_representatives(form),
    )


def isotropic_primitive_rays(form: GramForm) -> Optional[Tuple[DivClass, DivClass]]:
    """(left, right) primitive isotropic classes with D.H > 0, or None for a non-square disc."""
    root = square_root(form.disc)
    if root is None:
        return None
    left, _ = primitive(DivClass(root - form.d, form.h))
    right, _ = primitive(DivClass(form.d + root, -form.h))
    return left, right


def _extreme(classes: Sequence[DivClass], turn: int) -> Optional[DivClass]:
    """Most counterclockwise (turn=1) or clockwise (turn=-1) class of a half-plane."""
    best: Optional[DivClass] = None
    for item in classes:
        if best is None:
            best = item
            continue
        orientation = cross(best, item) * turn
        if orientation > 0:
            best = item
        elif orientation == 0 and item != best:
            raise RuntimeError(f"同一射线上出现两个本原 -2 类: {best.as_tuple()}, {item.as_tuple()}")
    return best


def _boundary_neighbours(
    form: GramForm, seed: DivClass, forward: Matrix, backward: Matrix
) -> Tuple[DivClass, DivClass]:
    """Walk an orbit inside the negative wedge across the H-perpendicular line.

    Returns the last orbit element with D.H > 0 and the negative of the first
    one with D.H < 0 (both effective).
    """
    degree = h_degree(form, seed)
    if degree == 0:
        _effective(form, seed)
    current = seed
    if degree > 0:
        while True:
            following = _apply(forward, current)
            if h_degree(form, following) == 0:
                _effective(form, following)
            if h_degree(form, following) < 0:
                return current, -following
            current = following
    while True:
        preceding = _apply(backward, current)
        if h_degree(form, preceding) == 0:
            _effective(form, preceding)
        if h_degree(form, preceding) > 0:
            return preceding, -current
        current = preceding


@functools.lru_cache(maxsize=4096)
def _extremal_pair(form: GramForm) -> Tuple[Optional[DivClass], Optional[DivClass]]:
    root = square_root(form.disc)
    if root is not None:
        classes = [_effective(form, item) for item in _split_representations(form, MINUS_TWO, root)]
        return (
            _extreme([item for item in classes if item.y > 0], 1),
            _extreme([item for item in classes if item.y < 0], -1),
        )

    period = river_period(form)
    # the negative wedge (y > 0 half) is preserved by the automorph
    seeds = [face if face.y > 0 else -face for face in period.negative_bank if self_int(form, face) == MINUS_TWO]
    if not seeds:
        return None, None
    forward, backward = period.automorph, _inverse(period.automorph)
    if cross(seeds[0], _apply(forward, seeds[0])) < 0:
        forward, backward = backward, forward

    lefts, rights = [], []
    for seed in seeds:
        left, right = _boundary_neighbours(form, seed, forward, backward)
        lefts.append(left)
        rights.append(right)
    LOGGER.debug("-2 轨道数=%d, form=%s", len(seeds), form.to_dict())
    return _extreme(lefts, 1), _extreme(rights, -1)


def extremal_minus_two(form: GramForm, side: Union[Side, str]) -> Optional[DivClass]:
    """Effective -2 class spanning the boundary of NE(X) on ``side``, if any."""
    side = side if isinstance(side, Side) else Side.from_value(side)
    left, right = _extremal_pair(form)
    return left if side is Side.LEFT else right
