import pytest

from fibra2.blowup import delta_invariant, multiplicity, tangent_cone, translate
from fibra2.field_arith.text import parse_bivariate

from conftest import GF2, GF4


def f(text, F=GF2):
    return {e: c.constant_value() for e, c in parse_bivariate(F, text).items()}


@pytest.mark.parametrize(
    "curve, expected",
    [
        ("y^2 + x^3", (1, 1, 2)),  # cusp
        ("y^2 + x^5", (2, 1, 2)),  # ramphoid cusp
        ("y^2 + x*y + x^3", (1, 2, 2)),  # node
        ("y^2 + x^2*y + x^4 + x^5", (2, 2, 2)),  # tacnode y(y + x^2) ~ x^4 (1 + x)
        ("y^3 + x^4", (3, 1, 3)),  # E6
        ("x*y*(x + y)", (3, 3, 3)),  # ordinary triple point
        ("y + x^2", (0, 1, 1)),
    ],
)
def test_classical_singularities(curve, expected):
    assert delta_invariant(GF2, f(curve)).as_tuple() == expected


def test_irrational_tangents_split_over_extension():
    # y^2 + x y + x^2 factors only over GF(4): an ordinary node with conjugate tangents
    inv = delta_invariant(GF2, f("y^2 + x*y + x^2 + y^3"))
    assert inv.as_tuple() == (1, 2, 2)


def test_intersection_number_of_two_smooth_branches():
    assert delta_invariant(GF2, f("y^2 + x^2*y + x^4 + x^5")).intersection == 2
    assert delta_invariant(GF2, f("y^2 + x^3")).intersection is None


def test_translate_moves_point_to_origin():
    g = translate(GF4, f("y^2 + x^3 + 1", GF4), 1, 0)
    assert (0, 0) not in g
    assert multiplicity(g) == 1


def test_tangent_cone():
    assert tangent_cone(f("y^2 + x*y + x^3")) == {2: 1, 1: 1}


def test_non_reduced_curve_is_reported():
    with pytest.raises(ValueError, match="not reduced"):
        delta_invariant(GF2, f("y^2 + x^2"), max_depth=10)


def test_point_off_curve():
    with pytest.raises(ValueError):
        delta_invariant(GF2, f("y^2 + 1"))
