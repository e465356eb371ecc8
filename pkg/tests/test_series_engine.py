import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibra2.curve_model import InseparableNormalForm, SeparableNormalForm
from fibra2.field_arith import RatFunc, Unsupported
from fibra2.series_engine import (
    RULES,
    LaurentSeries,
    PrimeSpec,
    eval_relation,
    expand_local_series,
    genus_via_rosenlicht,
    hensel,
    prime_specs,
    random_branch_instance,
    singularity_degree,
)

from conftest import GF2, GF4, K, ratfuncs

seeds = st.integers(0, 2**32 - 1)


def series(coeffs, valuation=0, N=12, F=GF2):
    return LaurentSeries.make(F, valuation, [K(c, F) if isinstance(c, str) else c for c in coeffs], N)


def spread(x: LaurentSeries) -> LaurentSeries:
    """sum c_i^2 t^(2i): the coefficient-wise square, read at level n + 1."""
    sq = x.square_coefficients()
    out = []
    for i, c in enumerate(sq.coeffs):
        out += [c, c.zero()] if i + 1 < len(sq.coeffs) else [c]
    return LaurentSeries.make(x.field, 2 * x.valuation, out, 2 * x.N)


def test_series_arithmetic_and_truncation():
    a = series(["1", "s"], N=5)
    b = series(["1", "1"], valuation=-1, N=4)
    p = a * b
    assert p.valuation == -1
    assert p.N == min(5 - 1, 4 + 0)
    assert p.coeff(0) == K("s+1")
    assert p.coeff(1) == K("s")
    with pytest.raises(IndexError):
        p.coeff(p.N)


@settings(max_examples=30, deadline=None)
@given(st.lists(ratfuncs(max_degree=2), min_size=1, max_size=6), st.integers(-3, 3))
def test_frobenius_consistency(coeffs, valuation):
    x = LaurentSeries.make(GF2, valuation, coeffs, valuation + 8)
    sq = x * x
    expected = spread(x)
    for i in range(sq.order(), min(sq.N, expected.N)):
        assert sq.coeff(i) == expected.coeff(i)


@settings(max_examples=20, deadline=None)
@given(ratfuncs(nonzero=True), ratfuncs())
def test_hensel_root_of_artin_schreier_series(c, d):
    # U^2 + U + c + d t = 0 has the simple root U = u0 + d t + d^2 t^2 + ... when u0^2 + u0 = c
    u0 = c
    const = u0 * u0 + u0
    G = {0: [const, d], 1: [K("1")], 2: [K("1")]}
    U = hensel(G, u0, 8)
    X = LaurentSeries.make(GF2, 0, U, 8)
    assert eval_relation(G, X).order() >= 8


def test_c2_i_expansion_matches_displayed_series():
    nf = SeparableNormalForm.of(GF2, 1, 0, 0, "s+1", "s")
    (spec,) = prime_specs(nf)
    assert spec.branch == "C2-i"
    z = expand_local_series(nf, spec).series
    b4, b6 = K("s+1"), K("s")
    # z = b6^-1 (t^-2 + b4 + b6 t + ...)
    assert z.coeff(-2) == b6.inverse()
    assert z.coeff(-1) == K("0")
    assert z.coeff(0) == b4 / b6
    assert z.coeff(1) == K("1")


@pytest.mark.parametrize("b6, delta", [("s", 1), ("s^2", 0)])
def test_c2_i_rule(b6, delta):
    nf = SeparableNormalForm.of(GF2, 1, 0, 0, 0, b6)
    (spec,) = prime_specs(nf)
    assert singularity_degree(nf, spec)[0] == delta


def test_d1_b1_nonsquare_has_delta_two():
    nf = InseparableNormalForm.of(GF2, 1, "s", 0, 0, 0, 0)
    (spec,) = prime_specs(nf)
    assert spec.branch == "D1-b3z-i"
    assert singularity_degree(nf, spec)[0] == 2


@pytest.mark.parametrize(
    "nf, expected",
    [
        (SeparableNormalForm.of(GF2, 1, 0, 0, 0, "s"), (2, 1, (1,))),
        (InseparableNormalForm.from_b(GF2, "x^5+s"), (2, 0, (2,))),
        (SeparableNormalForm.of(GF2, 1, 0, 0, 0, "s^2"), (1, 1, (0,))),
    ],
)
def test_genus_via_rosenlicht_examples(nf, expected):
    r = genus_via_rosenlicht(nf)
    assert (r.g, r.g_bar, r.deltas) == expected


@pytest.mark.parametrize("branch", sorted(RULES))
def test_residuals_per_branch(branch):
    rng = random.Random(branch)
    for _ in range(5):
        nf, spec = random_branch_instance(branch, (GF2, GF4)[rng.randrange(2)], rng)
        ex = expand_local_series(nf, spec, 12)
        assert ex.residual.order() >= 10
        delta, _ = singularity_degree(nf, spec)
        assert delta in (0, 1, 2)


def test_uncatalogued_branch():
    spec = PrimeSpec("C3-x", 1, "-", "-", {})
    with pytest.raises(Unsupported):
        singularity_degree(None, spec)
    with pytest.raises(Unsupported):
        random_branch_instance("C3-x", GF2, random.Random(0))


def test_truncation_order_must_cover_the_rules():
    nf = SeparableNormalForm.of(GF2, 1, 0, 0, 0, "s")
    (spec,) = prime_specs(nf)
    with pytest.raises(ValueError):
        expand_local_series(nf, spec, 4)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_separable_degree_bounds(seed):
    from fibra2.verify import random_separable

    r = genus_via_rosenlicht(random_separable(GF2, random.Random(seed), 2))
    assert all(d in (0, 1) for d in r.deltas)
    assert sum(r.deltas) <= 2
