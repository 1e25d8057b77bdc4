import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolated_curves.lattice import C_CLASS, H_CLASS, h_degree, self_int
from isolated_curves.models import AmplenessError, DivClass, GramForm, LatticeError, Side
from isolated_curves.qform import (
    extremal_minus_two,
    has_minus_two_class,
    isotropic_primitive_rays,
    minus_two_classes_bounded,
    minus_two_orbit_representatives,
    river_period,
    square_root,
)
from tests.brute_force import minus_two_in_box, minus_two_in_columns
from tests.table_data import CONE_ROWS, NO_MINUS_TWO_ROWS, form_for

ORACLE_BOUND = 400
TABLE_BOUND = 1000


def brute_force_minus_two(form: GramForm, bound: int = ORACLE_BOUND):
    return sorted(minus_two_in_box(form, bound), key=DivClass.as_tuple)


def test_square_root():
    assert square_root(49) == 7
    assert square_root(48) is None
    assert square_root(-4) is None
    assert square_root(0) == 0


@pytest.mark.parametrize("form", [GramForm(6, 19, 48), GramForm(8, 18, 34), GramForm(8, 20, 30)])
def test_minus_two_present(form):
    assert has_minus_two_class(form)


@pytest.mark.parametrize("row", NO_MINUS_TWO_ROWS, ids=lambda row: f"{row[0]}-{row[1]}")
def test_no_minus_two_rows_have_none(row):
    g, d, _, x_type = row[:4]
    assert not has_minus_two_class(form_for(x_type, g, d))


@pytest.mark.parametrize("row", NO_MINUS_TWO_ROWS, ids=lambda row: f"{row[0]}-{row[1]}")
def test_no_minus_two_rows_have_no_small_solutions(row):
    g, d, _, x_type = row[:4]
    form = form_for(x_type, g, d)
    assert form.c != 0
    assert not minus_two_in_columns(form, TABLE_BOUND)


@pytest.mark.parametrize("row", CONE_ROWS, ids=lambda row: f"{row[0]}-{row[1]}")
def test_cone_rows_have_minus_two(row):
    g, d, _, x_type = row[:4]
    assert has_minus_two_class(form_for(x_type, g, d))


def test_bounded_enumeration():
    sample = minus_two_classes_bounded(GramForm(6, 20, 46), 5)
    assert DivClass(-3, 2) in sample.solutions
    assert sample.exhaustive_bound == 5
    assert all(self_int(GramForm(6, 20, 46), item) == -2 for item in sample.solutions)
    assert sample.representatives


def test_bounded_enumeration_needs_positive_bound():
    with pytest.raises(LatticeError):
        minus_two_classes_bounded(GramForm(6, 20, 46), 0)


def test_river_period_preserves_form():
    form = GramForm(8, 18, 34)
    period = river_period(form)
    a, b, c = period.reduced
    assert a > 0 > c
    m = period.automorph
    assert m[0] * m[3] - m[1] * m[2] == 1
    for basis in (H_CLASS, C_CLASS):
        image = DivClass(m[0] * basis.x + m[1] * basis.y, m[2] * basis.x + m[3] * basis.y)
        assert self_int(form, image) == self_int(form, basis)
    assert all(self_int(form, face) < 0 for face in period.negative_bank)
    assert all(self_int(form, face) > 0 for face in period.positive_bank)


def test_river_period_needs_non_square_disc():
    with pytest.raises(LatticeError):
        river_period(GramForm(4, 6, 8))


def test_extremal_minus_two_sides():
    form = GramForm(8, 18, 34)
    assert extremal_minus_two(form, Side.LEFT) == DivClass(-147, 109)
    assert extremal_minus_two(form, "right") == DivClass(3, -1)


def test_extremal_minus_two_absent():
    form = GramForm(6, 18, 44)
    assert extremal_minus_two(form, Side.LEFT) is None
    assert extremal_minus_two(form, Side.RIGHT) is None


@pytest.mark.parametrize("row", CONE_ROWS, ids=lambda row: f"{row[0]}-{row[1]}")
def test_extremal_rays_of_cone_rows(row):
    g, d, _, x_type, rays = row[:5]
    form = form_for(x_type, g, d)
    assert extremal_minus_two(form, Side.LEFT) == DivClass(*rays[0])
    assert extremal_minus_two(form, Side.RIGHT) == DivClass(*rays[1])


@pytest.mark.parametrize("form", [GramForm(2, 1, 0), GramForm(6, 6, 4)])
def test_minus_two_class_orthogonal_to_h(form):
    assert has_minus_two_class(form)
    with pytest.raises(AmplenessError):
        extremal_minus_two(form, Side.LEFT)


def test_isotropic_rays():
    assert isotropic_primitive_rays(GramForm(4, 6, 8)) == (DivClass(-1, 1), DivClass(2, -1))
    assert isotropic_primitive_rays(GramForm(6, 19, 48)) is None


def test_square_disc_minus_two_classes():
    form = GramForm(4, 3, 2)
    representatives = minus_two_orbit_representatives(form)
    assert representatives
    assert all(self_int(form, item) == -2 and h_degree(form, item) > 0 for item in representatives)
    assert set(representatives) <= {
        item if h_degree(form, item) > 0 else -item for item in brute_force_minus_two(form, 10)
    }


@st.composite
def forms(draw):
    h = draw(st.integers(min_value=1, max_value=60))
    d = draw(st.integers(min_value=1, max_value=60))
    # c < d^2 / h keeps the discriminant positive
    c = draw(st.integers(min_value=-60, max_value=min(60, (d * d - 1) // h)))
    return GramForm(h, d, c)


@settings(max_examples=1000, deadline=None)
@given(forms())
def test_agrees_with_brute_force(form):
    found = brute_force_minus_two(form)
    assert all(self_int(form, item) == -2 for item in found)
    if found:
        assert has_minus_two_class(form)
    if not has_minus_two_class(form):
        assert not found


@settings(max_examples=60, deadline=None)
@given(forms())
def test_representatives_are_minus_two(form):
    for item in minus_two_orbit_representatives(form):
        assert self_int(form, item) == -2


@st.composite
def square_disc_forms(draw):
    # d = s + ht and c = t(2s + ht) give d^2 - hc = s^2
    h = draw(st.integers(min_value=1, max_value=20))
    s = draw(st.integers(min_value=1, max_value=30))
    t = draw(st.integers(min_value=-((s - 1) // h), max_value=5))
    return GramForm(h, s + h * t, t * (2 * s + h * t))


@settings(max_examples=200, deadline=None)
@given(square_disc_forms())
def test_square_disc_classes_match_brute_force(form):
    assert square_root(form.disc) is not None
    expected = {frozenset((item, -item)) for item in brute_force_minus_two(form)}
    found = {frozenset((item, -item)) for item in minus_two_orbit_representatives(form)}
    assert found == expected
    assert has_minus_two_class(form) is bool(expected)
