"""Square classes and Artin-Schreier equations in K = GF(2^k)(s).

Every genus predicate in the classifiers reduces to one of the tests here:
membership in K^2 or K^4, membership in K^2 + K^2*theta, and solvability of
w^2 + w = z.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import upoly
from .extension import Embedding, extension, identity
from .ratfunc import RatFunc


class Unsupported(Exception):
    """Input outside the implemented scope (reported, never guessed)."""


def is_square_with_witness(f: RatFunc) -> RatFunc | None:
    """Return h with h*h == f, or None when f is not a square in K."""
    F = f.field
    n = upoly.sqrt_exact(F, f.num)
    if n is None:
        return None
    d = upoly.sqrt_exact(F, f.den)
    if d is None:
        return None
    return RatFunc(F, n, d, reduced=True)


def is_square(f: RatFunc) -> bool:
    return is_square_with_witness(f) is not None


def is_fourth_power_with_witness(f: RatFunc) -> RatFunc | None:
    h = is_square_with_witness(f)
    return None if h is None else is_square_with_witness(h)


def square_decomposition(f: RatFunc) -> tuple[RatFunc, RatFunc]:
    """Write f = f0^2 + s*f1^2; K has basis {1, s} over K^2."""
    F = f.field
    p0, p1 = upoly.even_odd(F, upoly.mul(F, f.num, f.den))
    return RatFunc(F, p0, f.den), RatFunc(F, p1, f.den)


def in_square_span(x: RatFunc, theta: RatFunc) -> tuple[RatFunc, RatFunc] | None:
    """Return (alpha, beta) with x = alpha^2 + beta^2*theta, or None.

    Because [K : K^2] = 2, the span K^2 + K^2*theta is all of K as soon as
    theta is not a square, so None only occurs for square theta.
    """
    t0, t1 = square_decomposition(theta)
    if not t1:
        h = is_square_with_witness(x)
        return None if h is None else (h, x.zero())
    x0, x1 = square_decomposition(x)
    beta = x1 / t1
    return x0 + beta * t0, beta


@dataclass(frozen=True)
class ASReduction:
    """Outcome of reducing z modulo the image of w -> w^2 + w.

    ``partial`` satisfies z = partial^2 + partial + remainder.  ``kind`` is
    "solved" (remainder 0), "constant" (remainder a constant of absolute
    trace 1, solvable after a quadratic constant field extension) or
    "geometric" (a pole of odd order survives; the splitting field is not
    a rational function field).
    """

    partial: RatFunc
    remainder: RatFunc
    kind: str


def reduce_artin_schreier(z: RatFunc) -> ASReduction:
    F = z.field
    w = z.zero()
    rem = z

    def step(v: RatFunc):
        nonlocal w, rem
        w = w + v
        rem = rem + v.frobenius() + v

    # poles at finite places, highest multiplicity first
    while len(rem.den) > 1:
        parts = upoly.squarefree_factorization(F, rem.den)
        top = max(parts)
        if top % 2:
            return ASReduction(w, rem, "geometric")
        D = parts[top]
        m = top // 2
        E = upoly.exact_div(F, rem.den, upoly.power(F, D, top))
        target = upoly.mod(F, upoly.mul(F, rem.num, upoly.invmod(F, upoly.mod(F, E, D), D)), D)
        rho = upoly.sqrt_mod_squarefree(F, target, D)
        step(RatFunc(F, rho, upoly.power(F, D, m)))
    # the pole at infinity
    while len(rem.num) > 1:
        d = len(rem.num) - 1
        if d % 2:
            return ASReduction(w, rem, "geometric")
        step(RatFunc.poly(F, upoly.monomial(F.sqrt(rem.num[-1]), d // 2)))
    c0 = rem.num[0] if rem.num else 0
    r = F.solve_as(c0)
    if r is None:
        return ASReduction(w, rem, "constant")
    step(RatFunc.constant(F, r))
    return ASReduction(w, rem, "solved")


def solve_artin_schreier(z: RatFunc) -> RatFunc | None:
    """Return w with w^2 + w = z, or None if there is no solution in K."""
    red = reduce_artin_schreier(z)
    return red.partial if red.kind == "solved" else None


def solve_quadratic_char2(b: RatFunc, c: RatFunc) -> list[RatFunc]:
    """All roots T in K of T^2 + b*T + c."""
    if not b:
        h = is_square_with_witness(c)
        return [] if h is None else [h]
    w = solve_artin_schreier(c / b.frobenius())
    if w is None:
        return []
    return [b * w, b * w + b]


def split_quadratic(b: RatFunc, c: RatFunc) -> tuple[Embedding, list[RatFunc]]:
    """Roots of T^2 + b*T + c, passing to GF(2^(2k))(s) if that suffices.

    Returns the embedding used (identity when the roots lie in K) and the
    lifted roots.  Raises Unsupported when the splitting field is a
    geometric extension of K.
    """
    F = b.field
    if not b:
        h = is_square_with_witness(c)
        if h is None:
            raise Unsupported("T^2 = c with c not a square: purely inseparable root")
        return identity(F), [h]
    z = c / b.frobenius()
    red = reduce_artin_schreier(z)
    if red.kind == "geometric":
        raise Unsupported("roots of the quadratic generate a non-constant extension of K")
    if red.kind == "solved":
        w = red.partial
        return identity(F), [b * w, b * w + b]
    emb = extension(F, 2)
    w = solve_artin_schreier(z.lift(emb))
    assert w is not None
    bl = b.lift(emb)
    return emb, [bl * w, bl * w + bl]
