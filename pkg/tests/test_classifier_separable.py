import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibra2.classifier_separable import (
    c1_exception,
    cor_c2_case,
    discriminant_delta,
    genus_separable,
    is_geometrically_elliptic,
)
from fibra2.curve_model import SeparableNormalForm, apply_transformation
from fibra2.field_arith import is_square
from fibra2.genus import NotGeometricallyElliptic
from fibra2.series_engine import genus_via_rosenlicht
from fibra2.verify import random_separable

from conftest import GF2, GF4, K, ratfuncs

seeds = st.integers(0, 2**32 - 1)


def nf(*coeffs, F=GF2):
    return SeparableNormalForm.of(F, *coeffs)


def test_delta_examples():
    assert discriminant_delta(nf(0, 1, 1, 0, 1)).delta == K("1")
    assert discriminant_delta(nf(0, 0, 0, 0, 0)).delta == K("0")


@given(ratfuncs(), ratfuncs(), ratfuncs(), ratfuncs())
def test_delta_with_a2_zero(a0, b0, b4, b6):
    assert discriminant_delta(nf(a0, 0, b0, b4, b6)).delta == a0**4 * b6**4


def test_geometric_ellipticity():
    assert is_geometrically_elliptic(nf(0, 1, 1, 0, 1))
    assert not is_geometrically_elliptic(nf(1, 1, 1, 1, 1))
    assert not is_geometrically_elliptic(nf(0, 0, "s", 1, "s"))


def test_genus_two_with_j_zero():
    f = nf(1, 0, 0, 0, "s")
    r = genus_separable(f)
    assert (r.g, r.g_bar, r.deltas) == (2, 1, (1,))
    assert discriminant_delta(f).j1 == K("0")


def test_genus_drops_to_one():
    r = genus_separable(nf(1, 0, 0, 0, "s^2"))
    assert (r.g, r.g_bar, r.deltas) == (1, 1, (0,))


def test_nonsquare_a0a2_forces_genus_two():
    for b in [(1, 1, 1), (0, "s", 1), ("s^2", 0, "s^3+1")]:
        f = nf("s", 1, *b)
        if is_geometrically_elliptic(f):
            assert genus_separable(f).g == 2


def test_vanishing_delta_is_refused():
    with pytest.raises(NotGeometricallyElliptic):
        genus_separable(nf(1, 1, 1, 1, 1))
    with pytest.raises(NotGeometricallyElliptic):
        cor_c2_case(nf(0, 0, 1, 0, 1))


def test_c2_case_tags():
    case = cor_c2_case(nf(1, 0, 0, 0, "s"))
    assert case.tag == "i" and case.valid
    case = cor_c2_case(nf(0, 1, "s", 0, 1))
    assert case.tag == "ii" and case.valid
    case = cor_c2_case(nf("s", 1, 1, 0, 1))
    assert case.tag == "iii"
    assert case.valid == bool(discriminant_delta(case.form).delta)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_c2_case_matches_c1(seed):
    rng = random.Random(seed)
    F = (GF2, GF4)[seed % 2]
    f = random_separable(F, rng, 3)
    case = cor_c2_case(f)
    assert apply_transformation(f.model(), case.transformation) == case.form.model()
    assert case.valid == (not c1_exception(f))
    form = case.form
    if case.tag == "i":
        assert (form.a0, form.a2) == (K("1", F), K("0", F))
    elif case.tag == "ii":
        assert (form.a0, form.a2) == (K("0", F), K("1", F))
        assert c1_exception(f) == is_square(form.b0)
    else:
        assert form.a2 == K("1", F) and not is_square(form.a0)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_genus_matches_series_engine(seed):
    rng = random.Random(seed)
    F = (GF2, GF4)[seed % 2]
    f = random_separable(F, rng, 2)
    r, o = genus_separable(f), genus_via_rosenlicht(f)
    assert (r.g, r.g_bar, r.deltas) == (o.g, o.g_bar, o.deltas)
    assert r.g - r.g_bar == sum(r.deltas)
    assert all(d in (0, 1) for d in r.deltas)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_jbar_witness(seed):
    inv = discriminant_delta(random_separable(GF2, random.Random(seed), 2))
    if inv.jbar is not None:
        assert inv.jbar * inv.jbar == inv.j1
    else:
        assert not is_square(inv.j1)
