"""Exhaustive -2 searches used as oracles against the exact solvers."""

import math

from isolated_curves.models import DivClass, GramForm


def _exact_sqrt(n: int):
    if n < 0:
        return None
    root = math.isqrt(n)
    return root if root * root == n else None


def minus_two_in_box(form: GramForm, bound: int):
    """-2 classes with |x|, |y| <= bound, solving h x^2 + 2dy x + (c y^2 + 2) = 0 row by row."""
    found = set()
    for y in range(-bound, bound + 1):
        root = _exact_sqrt(form.disc * y * y - 2 * form.h)
        if root is None:
            continue
        for numerator in (-form.d * y + root, -form.d * y - root):
            if numerator % form.h == 0 and abs(numerator // form.h) <= bound:
                found.add(DivClass(numerator // form.h, y))
    return found


def minus_two_in_columns(form: GramForm, x_bound: int):
    """-2 classes with |x| <= x_bound and any y (needs c != 0), one column x at a time."""
    found = set()
    for x in range(-x_bound, x_bound + 1):
        root = _exact_sqrt(form.disc * x * x - 2 * form.c)
        if root is None:
            continue
        for numerator in (-form.d * x + root, -form.d * x - root):
            if numerator % form.c == 0:
                found.add(DivClass(x, numerator // form.c))
    return found
