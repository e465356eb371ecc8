"""Small dense polynomials in x with coefficients in K (lists of RatFunc).

Only what the model transformations and normal forms need: these
polynomials have degree at most 6.
"""

from __future__ import annotations

from collections.abc import Sequence

from .field_arith import RatFunc

KPoly = list


def zeros(F, n: int) -> KPoly:
    z = RatFunc.constant(F, 0)
    return [z] * n


def add(p: Sequence[RatFunc], q: Sequence[RatFunc]) -> KPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return out


def scale(p: Sequence[RatFunc], c: RatFunc) -> KPoly:
    return [c * x for x in p]


def mul(p: Sequence[RatFunc], q: Sequence[RatFunc]) -> KPoly:
    F = (p[0] if p else q[0]).field
    out = zeros(F, len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return out


def power(p: Sequence[RatFunc], n: int) -> KPoly:
    F = p[0].field
    out: KPoly = [RatFunc.constant(F, 1)]
    for _ in range(n):
        out = mul(out, p)
    return out


def square(p: Sequence[RatFunc]) -> KPoly:
    F = p[0].field
    out = zeros(F, 2 * len(p) - 1)
    for i, a in enumerate(p):
        out[2 * i] = a.frobenius()
    return out


def homogenize(p: Sequence[RatFunc], d: int, m: Sequence[RatFunc]) -> KPoly:
    """sum_i p_i (m11 x + m12)^i (m21 x + m22)^(d-i), padded to length d+1."""
    F = m[0].field
    num = [m[1], m[0]]
    den = [m[3], m[2]]
    out = zeros(F, d + 1)
    for i, c in enumerate(p):
        if c:
            term = mul(power(num, i), power(den, d - i))
            out = add(out, scale(term, c))
    return pad(out, d + 1)


def pad(p: Sequence[RatFunc], n: int) -> KPoly:
    p = list(p)
    if len(p) > n:
        if any(p[n:]):
            raise ValueError(f"polynomial exceeds formal degree {n - 1}")
        return p[:n]
    F = p[0].field
    return p + zeros(F, n - len(p))


def degree(p: Sequence[RatFunc]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def evaluate(p: Sequence[RatFunc], x: RatFunc) -> RatFunc:
    r = x.zero()
    for c in reversed(p):
        r = r * x + c
    return r
