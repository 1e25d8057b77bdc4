"""
Effective cone NE(X) and nef cone of a rank-2 K3 lattice.

Each boundary ray of NE(X) is either a smooth rational curve (the extremal
effective -2 class on that side) or a rational isotropic ray. Without -2
classes and with a non-square discriminant the closed cone is the closure of
the positive cone, which has no integral generators.
"""

from __future__ import annotations

import logging
from typing import Tuple

from .lattice import C_CLASS, H_CLASS, h_degree, pair, primitive, self_int
from .models import (
    ConeDesc,
    ConeKind,
    ConeError,
    DivClass,
    Effectivity,
    ExtremalRay,
    GramForm,
    LatticeError,
    RayTag,
    Side,
)
from .qform import extremal_minus_two, isotropic_primitive_rays

LOGGER = logging.getLogger(__name__)


def _orthogonal_nef(form: GramForm, ray: DivClass) -> DivClass:
    """Primitive class orthogonal to ``ray`` with positive H-degree."""
    normal, _ = primitive(DivClass(-pair(form, ray, C_CLASS), pair(form, ray, H_CLASS)))
    return normal if h_degree(form, normal) > 0 else -normal


def effective_cone(form: GramForm) -> ConeDesc:
    isotropic = isotropic_primitive_rays(form)
    rays = []
    for index, side in enumerate((Side.LEFT, Side.RIGHT)):
        curve = extremal_minus_two(form, side)
        if curve is not None:
            rays.append(ExtremalRay(curve, RayTag.MINUS_TWO))
        elif isotropic is not None:
            rays.append(ExtremalRay(isotropic[index], RayTag.ISOTROPIC))

    if not rays:
        LOGGER.debug("无 -2 类且判别式非平方: %s 取光锥闭包", form.to_dict())
        return ConeDesc(form=form, kind=ConeKind.IRRATIONAL_LIGHT_CONE)
    if len(rays) != 2:
        # -2 orbits of a non-square form are infinite on both sides
        raise RuntimeError(f"只找到一侧的极射线: {form.to_dict()}")

    ray_left, ray_right = rays
    LOGGER.debug(
        "NE(X) 极射线: %s(%s), %s(%s)",
        ray_left.divisor.as_tuple(), ray_left.tag.value,
        ray_right.divisor.as_tuple(), ray_right.tag.value,
    )
    return ConeDesc(
        form=form,
        kind=ConeKind.RATIONAL_RAYS,
        ray_left=ray_left,
        ray_right=ray_right,
        nef_left=_orthogonal_nef(form, ray_left.divisor),
        nef_right=_orthogonal_nef(form, ray_right.divisor),
    )


def nef_generators(form: GramForm, cone: ConeDesc) -> Tuple[DivClass, DivClass]:
    """Dual generators; the left one is orthogonal to the left ray."""
    if not cone.is_rational:
        raise ConeError("nef 锥等于正锥的闭包, 没有整生成元")
    return _orthogonal_nef(form, cone.ray_left.divisor), _orthogonal_nef(form, cone.ray_right.divisor)


def in_closed_cone(form: GramForm, cone: ConeDesc, divisor: DivClass) -> bool:
    if cone.is_rational:
        return pair(form, divisor, cone.nef_left) >= 0 and pair(form, divisor, cone.nef_right) >= 0
    return h_degree(form, divisor) >= 0 and self_int(form, divisor) >= 0


def classify_effectivity(form: GramForm, cone: ConeDesc, divisor: DivClass) -> Effectivity:
    if divisor.is_zero:
        raise LatticeError("零类的有效性没有意义")
    if not in_closed_cone(form, cone, divisor):
        return Effectivity.NOT_EFFECTIVE
    square = self_int(form, divisor)
    if not cone.is_rational:
        if h_degree(form, divisor) > 0 and square >= 0:
            return Effectivity.EFFECTIVE
        return Effectivity.NOT_EFFECTIVE
    if square >= -2 and h_degree(form, divisor) > 0:
        # chi = 2 + D^2/2 >= 1 and h^2 = h^0(-D) = 0
        return Effectivity.EFFECTIVE
    return Effectivity.BOUNDARY_LIMIT


def is_nef(form: GramForm, cone: ConeDesc, divisor: DivClass) -> bool:
    if cone.is_rational:
        return all(pair(form, divisor, ray.divisor) >= 0 for ray in cone.rays)
    return h_degree(form, divisor) >= 0 and self_int(form, divisor) >= 0


def is_nef_and_big(form: GramForm, cone: ConeDesc, divisor: DivClass) -> bool:
    return is_nef(form, cone, divisor) and self_int(form, divisor) > 0
