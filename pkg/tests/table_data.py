"""Expected rows of the no-(-2) table and the cone table.

Classes are (x, y) for xH + yC. Nef generators are the primitive classes
orthogonal to the extremal rays, oriented so that N.H > 0.
"""

import math

from isolated_curves.models import GramForm


def form_for(x_type, g, d) -> GramForm:
    return GramForm.for_curve(math.prod(x_type), d, g)


# (g, d, y_type, x_type, D, D^2)
NO_MINUS_TWO_ROWS = [
    (23, 18, (5,), (3, 2), (5, -1), 14),
    (24, 19, (5,), (3, 2), (5, -1), 6),
    (26, 20, (5,), (3, 2), (5, -1), 0),
    (27, 20, (5,), (3, 2), (5, -1), 2),
    (29, 21, (5,), (3, 2), (5, -1), -4),
    (16, 17, (2, 4), (2, 2, 2), (4, -1), 22),
    (16, 18, (2, 4), (2, 2, 2), (4, -1), 14),
    (16, 19, (2, 4), (2, 2, 2), (4, -1), 6),
    (17, 17, (2, 4), (2, 2, 2), (4, -1), 24),
    (17, 18, (2, 4), (2, 2, 2), (4, -1), 16),
    (17, 19, (2, 4), (2, 2, 2), (4, -1), 8),
    (17, 20, (2, 4), (2, 2, 2), (4, -1), 0),
    (18, 20, (2, 4), (2, 2, 2), (4, -1), 2),
    (19, 18, (2, 4), (2, 2, 2), (4, -1), 20),
    (19, 20, (2, 4), (2, 2, 2), (4, -1), 4),
    (19, 21, (2, 4), (2, 2, 2), (4, -1), -4),
    (20, 19, (2, 4), (2, 2, 2), (4, -1), 14),
    (20, 20, (2, 4), (2, 2, 2), (4, -1), 6),
    (21, 20, (2, 4), (2, 2, 2), (4, -1), 8),
    (21, 21, (2, 4), (2, 2, 2), (4, -1), 0),
    (22, 20, (2, 4), (2, 2, 2), (4, -1), 10),
    (22, 21, (2, 4), (2, 2, 2), (4, -1), 2),
    (23, 20, (2, 4), (2, 2, 2), (4, -1), 12),
    (23, 22, (2, 4), (2, 2, 2), (4, -1), -4),
    (25, 21, (2, 4), (2, 2, 2), (4, -1), 8),
    (25, 22, (2, 4), (2, 2, 2), (4, -1), 0),
    (26, 22, (2, 4), (2, 2, 2), (4, -1), 2),
    (27, 22, (2, 4), (2, 2, 2), (4, -1), 4),
    (29, 23, (2, 4), (2, 2, 2), (4, -1), 0),
    (8, 12, (3, 3), (3, 2, 1), (3, -1), -4),
    (11, 16, (2, 2, 3), (2, 2, 2, 1), (3, -1), -4),
    (4, 9, (2, 2, 2, 2), (2, 2, 2, 1, 1), (2, -1), 2),
    (5, 10, (2, 2, 2, 2), (2, 2, 2, 1, 1), (2, -1), 0),
    (5, 11, (2, 2, 2, 2), (2, 2, 2, 1, 1), (2, -1), -4),
]

# (g, d, y_type, x_type, (ray_left, ray_right), (nef_left, nef_right), D, D^2, reason)
CONE_ROWS = [
    (23, 19, (5,), (3, 2), ((-34451, 22588), (827, -172)), ((-339303, 222466), (8145, -1694)), (5, -1), 4, "nef_big_kv"),
    (24, 20, (5,), (3, 2), ((-3, 2), (192, -37)), ((-16, 11), (1069, -206)), (5, -1), -4, "rr_minus4_both_empty"),
    (25, 19, (5,), (3, 2), ((-7, 4), (215743, -46996)), ((-59, 34), (1843309, -401534)), (5, -1), 8, "nef_big_kv"),
    (25, 20, (5,), (3, 2), ((-11, 7), (5, -1)), ((-58, 37), (26, -5)), (5, -1), -2, "extremal_rational_curve"),
    (16, 20, (2, 4), (2, 2, 2), ((-1, 1), (4, -1)), ((-5, 6), (25, -6)), (4, -1), -2, "extremal_rational_curve"),
    (18, 18, (2, 4), (2, 2, 2), ((-147, 109), (3, -1)), ((-530, 393), (10, -3)), (4, -1), 18, "nef_big_kv"),
    (18, 19, (2, 4), (2, 2, 2), ((-6, 5), (32006, -9005)), ((-56, 47), (301944, -84953)), (4, -1), 10, "nef_big_kv"),
    (19, 19, (2, 4), (2, 2, 2), ((-17, 13), (66233, -19237)), ((-145, 111), (565895, -164361)), (4, -1), 12, "nef_big_kv"),
    (20, 21, (2, 4), (2, 2, 2), ((-425540, 366241), (4, -1)), ((-4980818, 4286741), (46, -11)), (4, -1), -2, "extremal_rational_curve"),
    (21, 19, (2, 4), (2, 2, 2), ((-707, 449), (3, -1)), ((-4527, 2875), (17, -5)), (4, -1), 16, "nef_big_kv"),
    (23, 21, (2, 4), (2, 2, 2), ((-13019, 9005), (19, -5)), ((-122821, 84953), (179, -47)), (4, -1), 4, "nef_big_kv"),
    (24, 21, (2, 4), (2, 2, 2), ((-29952, 19237), (48, -13)), ((-255910, 164361), (410, -111)), (4, -1), 6, "nef_big_kv"),
    (24, 22, (2, 4), (2, 2, 2), ((-984, 701), (4, -1)), ((-5299, 3775), (21, -5)), (4, -1), -2, "extremal_rational_curve"),
    (27, 23, (2, 4), (2, 2, 2), ((-26405, 17077), (21, -5)), ((-280689, 181531), (223, -53)), (4, -1), -4, "rr_minus4_both_empty"),
    (28, 23, (2, 4), (2, 2, 2), ((-8899156, 5413465), (4, -1)), ((-87646522, 53316447), (38, -9)), (4, -1), -2, "extremal_rational_curve"),
    (4, 8, (2, 2, 3), (3, 2, 1, 1), ((-1, 2), (2, -1)), ((-2, 5), (5, -2)), (2, -1), -2, "extremal_rational_curve"),
    (4, 10, (2, 2, 2, 2), (2, 2, 2, 1, 1), ((-38, 109), (2, -1)), ((-137, 393), (7, -3)), (2, -1), -2, "extremal_rational_curve"),
    (6, 11, (2, 2, 2, 2), (2, 2, 2, 1, 1), ((-258, 449), (2, -1)), ((-1652, 2875), (12, -5)), (2, -1), -2, "extremal_rational_curve"),
]
