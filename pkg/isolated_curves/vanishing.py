"""
Vanishing of H^1(X, O_X(D)) on a rank-2 K3 surface.

Two deciders:

- ``h1_no_minus_two``: complete answer on lattices without -2 classes
  (every effective class is nef there, so only D^2 and divisibility matter).
- ``h1_with_cone``: a rule cascade over the computed NE(X); it abstains with
  ``unknown`` whenever none of its rules applies.

Both are symmetric under D -> -D (Serre duality on a K3).
"""

from __future__ import annotations

import logging

from .cones import classify_effectivity, is_nef_and_big
from .lattice import chi, h_degree, primitive, self_int
from .models import (
    ConeDesc,
    ConeError,
    DivClass,
    Effectivity,
    GramForm,
    H1Certificate,
    H1Reason,
    H1Verdict,
    RayTag,
)
from .qform import has_minus_two_class

LOGGER = logging.getLogger(__name__)


def _vanishes(reason: H1Reason, detail: str) -> H1Certificate:
    return H1Certificate(H1Verdict.VANISHES, reason, 0, detail)


def h1_no_minus_two(form: GramForm, divisor: DivClass) -> H1Certificate:
    if has_minus_two_class(form):
        raise ConeError(f"{form.to_dict()} 含 -2 类, 不能用无 -2 类的判据")
    if divisor.is_zero:
        return _vanishes(H1Reason.ZERO_CLASS, "D = 0")

    euler = chi(form, divisor)
    square = self_int(form, divisor)
    if square > 0:
        return _vanishes(H1Reason.NO_MINUS_TWO_LATTICE, f"D^2 = {square} > 0: D 或 -D 有效且 nef, 大")
    if square == 0:
        _, multiple = primitive(divisor)
        if multiple > 1:
            return H1Certificate(
                H1Verdict.NONVANISHING,
                H1Reason.ELLIPTIC_PENCIL_MULTIPLE,
                multiple - 1,
                f"D = {multiple}E, E 为椭圆束",
            )
        return _vanishes(H1Reason.NO_MINUS_TWO_LATTICE, "D^2 = 0 且 D 本原: |D| 为椭圆束")
    if square == -4:
        return _vanishes(H1Reason.NO_MINUS_TWO_LATTICE, "D^2 = -4: |D| 与 |-D| 皆空, chi = 0")
    # no effective class with negative square, so h^0 = h^2 = 0
    return H1Certificate(
        H1Verdict.NONVANISHING,
        H1Reason.RR_NEGATIVE_SQUARE,
        -euler,
        f"D^2 = {square} < -4: h1 = -chi = {-euler}",
    )


def h1_with_cone(form: GramForm, cone: ConeDesc, divisor: DivClass) -> H1Certificate:
    if divisor.is_zero:
        return _vanishes(H1Reason.ZERO_CLASS, "D = 0")
    if h_degree(form, divisor) < 0:
        divisor = -divisor

    square = self_int(form, divisor)
    if is_nef_and_big(form, cone, divisor):
        return _vanishes(H1Reason.NEF_BIG_KV, f"{divisor.as_tuple()} nef 且 D^2 = {square} > 0")

    if square == -4:
        if all(
            classify_effectivity(form, cone, candidate) is Effectivity.NOT_EFFECTIVE
            for candidate in (divisor, -divisor)
        ):
            return _vanishes(H1Reason.RR_MINUS4_BOTH_EMPTY, "|D| 与 |-D| 皆空, chi = 0")

    if square == -2:
        for ray in cone.rays:
            if ray.tag is RayTag.MINUS_TWO and ray.divisor in (divisor, -divisor):
                return _vanishes(H1Reason.EXTREMAL_RATIONAL_CURVE, f"{ray.divisor.as_tuple()} 是光滑有理曲线")

    if square == 0:
        base, multiple = primitive(divisor)
        for ray in cone.rays:
            if ray.tag is RayTag.ISOTROPIC and ray.divisor in (base, -base) and multiple > 1:
                return H1Certificate(
                    H1Verdict.NONVANISHING,
                    H1Reason.ELLIPTIC_PENCIL_MULTIPLE,
                    multiple - 1,
                    f"D = {multiple} x {ray.divisor.as_tuple()}",
                )

    LOGGER.debug("h1 判据均不适用: form=%s, D=%s", form.to_dict(), divisor.as_tuple())
    return H1Certificate(H1Verdict.UNKNOWN, H1Reason.OUTSIDE_RULES, None, f"D^2 = {square}")
