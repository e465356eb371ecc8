from hypothesis import given
from hypothesis import strategies as st

from fibra2.field_arith import (
    GFElement,
    ParseError,
    RatFunc,
    Unsupported,
    extension,
    gf,
    gf_sqrt,
    in_square_span,
    is_fourth_power_with_witness,
    is_square,
    is_square_with_witness,
    parse_gf,
    reduce_artin_schreier,
    solve_artin_schreier,
    solve_quadratic_char2,
    split_quadratic,
    split_roots,
)
from fibra2.field_arith import upoly
from fibra2.field_arith.text import format_ratfunc

from conftest import GF2, GF4, K, ratfuncs

import pytest


# -- GF(2^k) -------------------------------------------------------------------------


def test_gf4_modulus_and_sqrt():
    assert GF4.modulus == 0b111
    g = parse_gf(GF4, "g")
    assert GF4.sqrt(g) == parse_gf(GF4, "g+1")
    assert GF4.sqrt(0) == 0 and GF4.sqrt(1) == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 8])
def test_gf_every_element_has_inverse_and_root(k):
    F = gf(k)
    for a in F.elements():
        assert F.sqr(F.sqrt(a)) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1


@given(st.integers(0, 255), st.integers(0, 255))
def test_gf256_sqrt_multiplicative(a, b):
    F = gf(8)
    x, y = GFElement(F, a), GFElement(F, b)
    assert gf_sqrt(x) * gf_sqrt(x) == x
    assert gf_sqrt(x * y) == gf_sqrt(x) * gf_sqrt(y)


@given(st.integers(0, 255))
def test_gf256_artin_schreier(c):
    F = gf(8)
    w = F.solve_as(c)
    if F.trace(c):
        assert w is None
    else:
        assert F.sqr(w) ^ w == c


def test_field_elements_parse_and_format():
    F = gf(3)
    for a in F.elements():
        assert parse_gf(F, F.format(a)) == a


def test_gf_parse_error_has_position():
    with pytest.raises(ParseError) as e:
        parse_gf(GF4, "g+*1")
    assert e.value.pos == 2


# -- polynomials --------------------------------------------------------------------


@given(st.lists(st.integers(0, 15), max_size=20), st.lists(st.integers(0, 15), max_size=12))
def test_upoly_divmod_identity(p, q):
    F = gf(4)
    p, q = upoly.strip(p), upoly.strip(q)
    if not q:
        return
    quo, rem = upoly.divmod_(F, p, q)
    assert upoly.add(upoly.mul(F, quo, q), rem) == p
    assert upoly.deg(rem) < upoly.deg(q)


@given(st.lists(st.integers(0, 255), max_size=30), st.lists(st.integers(0, 255), max_size=30))
def test_upoly_fast_mul_matches_schoolbook(p, q):
    F = gf(8)
    p, q = upoly.strip(p), upoly.strip(q)
    naive = [0] * max(len(p) + len(q) - 1, 0)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            naive[i + j] ^= F.mul(a, b)
    assert upoly.mul(F, p, q) == upoly.strip(naive)


def test_roots_of_split_polynomial():
    F = gf(4)
    f = upoly.mul(F, upoly.mul(F, [3, 1], [7, 1]), [0, 1])
    assert sorted(upoly.roots(F, f)) == [0, 3, 7]


def test_split_roots_moves_to_extension():
    emb, roots = split_roots(GF2, [1, 1, 1])  # T^2 + T + 1
    assert emb.big.k == 2
    for r in roots:
        assert upoly.evaluate(emb.big, [1, 1, 1], r) == 0
    assert extension(GF2, 3).big.k == 3


# -- K = GF(2^k)(s) ---------------------------------------------------------------------


def test_ratfunc_canonical_form():
    f = K("(s^2+1)/(s+1)")
    assert f == K("s+1")
    assert K("s/(s^2+s)") == K("1/(s+1)")


@given(ratfuncs(), ratfuncs(nonzero=True))
def test_ratfunc_field_axioms(f, g):
    assert (f + g) - g == f
    assert (f * g) / g == f
    assert f + f == f.zero()


@given(ratfuncs())
def test_ratfunc_print_parse_round_trip(f):
    assert RatFunc.parse(GF2, format_ratfunc(f)) == f


def test_is_square_examples():
    assert is_square_with_witness(K("s")) is None
    assert is_square_with_witness(K("s^2+1")) == K("s+1")
    assert is_square_with_witness(K("1/s^4")) == K("1/s^2")


def test_fourth_power_examples():
    assert is_fourth_power_with_witness(K("s^4")) == K("s")
    assert is_fourth_power_with_witness(K("s^2")) is None
    assert is_fourth_power_with_witness(K("s^4+1")) == K("s+1")


@given(ratfuncs())
def test_square_witness_round_trip(f):
    h = is_square_with_witness(f * f)
    assert h * h == f * f


@given(ratfuncs(), ratfuncs(nonzero=True))
def test_square_class_is_stable_under_square_factors(f, g):
    assert is_square(f) == is_square(f * g * g)


@given(ratfuncs())
def test_fourth_power_implies_square(f):
    if is_fourth_power_with_witness(f) is not None:
        assert is_square(f)
    assert is_fourth_power_with_witness(f ** 4) is not None


def test_in_square_span_examples():
    s = K("s")
    assert in_square_span(s, s) == (K("0"), K("1"))
    u, v = in_square_span(K("s^2+s^3"), s)
    assert u * u + v * v * s == K("s^2+s^3")
    # K is spanned by 1 and any non-square over K^2, so s lies in K^2 + K^2 s^3
    u, v = in_square_span(s, K("s^3"))
    assert u * u + v * v * K("s^3") == s


@given(ratfuncs(), ratfuncs(nonzero=True))
def test_in_square_span_always_decomposes(x, theta):
    if is_square(theta):
        return
    u, v = in_square_span(x, theta)
    assert u * u + v * v * theta == x


def test_quadratic_examples():
    assert solve_quadratic_char2(K("1"), K("0")) == [K("0"), K("1")]
    assert sorted(solve_quadratic_char2(K("1"), K("s^2+s")), key=RatFunc.sort_key) == [K("s"), K("s+1")]
    assert solve_quadratic_char2(K("0"), K("s")) == []


@given(ratfuncs(), ratfuncs())
def test_quadratic_roots_are_exact(b, c):
    for r in solve_quadratic_char2(b, c):
        assert r * r + b * r + c == r.zero()


def test_artin_schreier_examples():
    assert solve_artin_schreier(K("0")) == K("0")
    assert solve_artin_schreier(K("s^2+s")) == K("s")
    assert solve_artin_schreier(K("s")) is None


@given(ratfuncs())
def test_artin_schreier_round_trip(w):
    z = w * w + w
    sol = solve_artin_schreier(z)
    assert sol is not None and sol * sol + sol == z


@given(ratfuncs(field=GF4, max_degree=2))
def test_artin_schreier_reduction_is_equivalent(z):
    red = reduce_artin_schreier(z)
    w = red.partial
    assert w * w + w + red.remainder == z
    assert (red.kind == "solved") == (not red.remainder)


def test_split_quadratic_constant_extension():
    # T^2 + T + 1 has no root in GF(2)(s) but splits over GF(4)(s)
    emb, roots = split_quadratic(K("1"), K("1"))
    assert emb.big.k == 2 and len(roots) == 2


def test_split_quadratic_geometric_is_unsupported():
    with pytest.raises(Unsupported):
        split_quadratic(K("1"), K("s"))
