import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibra2.classifier_inseparable import analyse_inseparable, genus_inseparable
from fibra2.curve_model import InseparableNormalForm
from fibra2.field_arith import RatFunc, Unsupported, extension
from fibra2.series_engine import genus_via_rosenlicht
from fibra2.verify import random_inseparable

from conftest import GF2, GF4

seeds = st.integers(0, 2**32 - 1)


def report(b, F=GF2):
    return genus_inseparable(InseparableNormalForm.from_b(F, b))


def test_b3_zero_b1_fourth_power():
    r = report("x^5+s")
    assert (r.g, r.g_bar, r.deltas) == (2, 0, (2,))
    assert r.case == "b3z-iii"


def test_b3_zero_b1_square_not_fourth_power():
    r = report("x^5+s^2*x")
    assert (r.g, r.deltas) == (0, (0,))
    assert r.case == "b3z-ii"


def test_b3_nonzero_two_primes():
    r = report("x^5+x^3+s")
    assert (r.g, r.deltas) == (2, (1, 1))


def test_b1_not_a_square_gives_delta_two():
    r = report("x^5+s*x+1")
    assert r.case == "b3z-i" and r.deltas == (2,)


def test_constant_extension_when_roots_need_it():
    # T^2 + T + 1 splits only over GF(4)
    r = report("x^5+x^3+x+s")
    assert r.extension_degree == 2


def test_geometric_extension_is_unsupported():
    with pytest.raises(Unsupported):
        report("x^5+x^3+s*x")


def test_requires_normal_form():
    with pytest.raises(TypeError):
        genus_inseparable("x^5+s")


def _polys_up_to_degree_2():
    for c in itertools.product((0, 1), repeat=3):
        yield RatFunc.poly(GF2, list(c))


def test_exhaustive_small_b1_b3_against_series_engine():
    rng = random.Random(7)
    checked = 0
    for b1, b3 in itertools.product(_polys_up_to_degree_2(), repeat=2):
        others = [RatFunc.poly(GF2, [rng.randrange(2) for _ in range(3)]) for _ in range(4)]
        nf = InseparableNormalForm.of(GF2, others[0], b1, others[1], b3, others[2], others[3])
        try:
            r = genus_inseparable(nf)
        except Unsupported:
            continue
        o = genus_via_rosenlicht(nf)
        assert (r.g, r.g_bar, sorted(r.deltas)) == (o.g, o.g_bar, sorted(o.deltas))
        checked += 1
    assert checked > 20


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_random_gf4_against_series_engine(seed):
    nf = random_inseparable(GF4, random.Random(seed), 2)
    try:
        r = genus_inseparable(nf)
    except Unsupported:
        return
    o = genus_via_rosenlicht(nf)
    assert (r.g, r.g_bar, sorted(r.deltas)) == (o.g, o.g_bar, sorted(o.deltas))
    assert r.g in (0, 1, 2) and r.g_bar == 0
    assert all(d in (0, 1, 2) for d in r.deltas) and sum(r.deltas) <= 2


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_constant_field_extension_keeps_genus(seed):
    nf = random_inseparable(GF2, random.Random(seed), 2)
    try:
        r = genus_inseparable(nf)
    except Unsupported:
        return
    emb = extension(GF2, 2)
    lifted = InseparableNormalForm(*(c.lift(emb) for c in (nf.b0, nf.b1, nf.b2, nf.b3, nf.b4, nf.b6)))
    assert genus_inseparable(lifted).g == r.g


def test_analysis_records_roots():
    an = analyse_inseparable(InseparableNormalForm.from_b(GF2, "x^5+x^3+s"))
    assert an.case == "b3nz"
    assert sorted(str(c) for c in an.roots) == ["0", "1"]
