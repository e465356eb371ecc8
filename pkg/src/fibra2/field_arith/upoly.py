"""Dense univariate polynomials over a :class:`GF2k`.

A polynomial is a tuple of field ints, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  Every function takes the
field as its first argument.
"""

from __future__ import annotations

import random

from .gf import GF2k

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def strip(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(p: Poly) -> int:
    """Degree; -1 stands in for the -infinity degree of the zero polynomial."""
    return len(p) - 1


def const(a: int) -> Poly:
    return (a,) if a else ()


def monomial(a: int, n: int) -> Poly:
    return (0,) * n + (a,) if a else ()


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] ^= c
    return strip(r) if len(p) == len(q) else tuple(r)


def scale(F: GF2k, p: Poly, a: int) -> Poly:
    if a == 0:
        return ()
    if a == 1:
        return p
    return tuple(F.mul(a, c) for c in p)


def shift(p: Poly, n: int) -> Poly:
    return (0,) * n + p if p else ()


def _pack(p: Poly, w: int) -> int:
    v = 0
    for c in reversed(p):
        v = (v << w) | c
    return v


def _unpack_bits(v: int, n: int) -> list:
    return [(v >> i) & 1 for i in range(n)]


def _clmul(a: int, b: int) -> int:
    """Carry-less product using a 4-bit window over ``b``."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    t = [0] * 16
    for j in range(1, 16):
        t[j] = (t[j >> 1] << 1) ^ (a if j & 1 else 0)
    r, sh = 0, 0
    while b:
        r ^= t[b & 15] << sh
        b >>= 4
        sh += 4
    return r


def _kron_table(F: GF2k) -> list:
    tab = getattr(F, "_kron_red", None)
    if tab is None:
        from .gf import clmod

        tab = [clmod(v, F.modulus) for v in range(1 << (2 * F.k - 1))]
        F._kron_red = tab
    return tab


def _mul_kronecker(F: GF2k, p: Poly, q: Poly) -> Poly:
    # coefficient products have degree <= 2k-2 in the generator and xor never
    # raises degree, so slots of 2k-1 bits never overlap
    w = 2 * F.k - 1
    v = _clmul(_pack(p, w), _pack(q, w))
    n = len(p) + len(q) - 1
    if w == 1:
        return strip(_unpack_bits(v, n))
    red, mask = _kron_table(F), (1 << w) - 1
    return strip([red[(v >> (i * w)) & mask] for i in range(n)])


def mul(F: GF2k, p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    if len(p) == 1:
        return scale(F, q, p[0])
    if len(q) == 1:
        return scale(F, p, q[0])
    if F.k <= 8 and (F.k == 1 or min(len(p), len(q)) > 6):
        return _mul_kronecker(F, p, q)
    r = [0] * (len(p) + len(q) - 1)
    m = F.mul
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    r[i + j] ^= m(a, b)
    return strip(r)


def sqr(F: GF2k, p: Poly) -> Poly:
    """Frobenius on coefficients: (sum c_i s^i)^2 = sum c_i^2 s^(2i)."""
    r = [0] * (2 * len(p) - 1) if p else []
    for i, a in enumerate(p):
        r[2 * i] = F.sqr(a)
    return tuple(r)


def power(F: GF2k, p: Poly, n: int) -> Poly:
    r = ONE
    while n:
        if n & 1:
            r = mul(F, r, p)
        n >>= 1
        if n:
            p = sqr(F, p)
    return r


def _divmod_gf2(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    a, b = _pack(p, 1), _pack(q, 1)
    db = b.bit_length()
    quot = 0
    while a.bit_length() >= db:
        sh = a.bit_length() - db
        quot |= 1 << sh
        a ^= b << sh
    return strip(_unpack_bits(quot, len(p))), strip(_unpack_bits(a, len(q)))


def divmod_(F: GF2k, p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    if len(p) - 1 < dq:
        return (), p
    if F.k == 1:
        return _divmod_gf2(p, q)
    r = list(p)
    quot = [0] * (len(p) - dq)
    exp, log = F._exp, F._log
    if exp is None:
        inv_lead = F.inv(q[-1])
        m = F.mul
        for i in range(len(p) - 1, dq - 1, -1):
            c = r[i]
            if c:
                c = m(c, inv_lead)
                quot[i - dq] = c
                for j, b in enumerate(q):
                    if b:
                        r[i - dq + j] ^= m(c, b)
        return strip(quot), strip(r[:dq])
    q1 = F.order - 1
    lq = [(j, log[b]) for j, b in enumerate(q) if b]
    l_lead = log[q[-1]]
    for i in range(len(p) - 1, dq - 1, -1):
        c = r[i]
        if c:
            lc = (log[c] - l_lead) % q1
            quot[i - dq] = exp[lc]
            base = i - dq
            for j, lb in lq:
                r[base + j] ^= exp[lc + lb]
    return strip(quot), strip(r[:dq])


def mod(F: GF2k, p: Poly, q: Poly) -> Poly:
    return divmod_(F, p, q)[1]


def exact_div(F: GF2k, p: Poly, q: Poly) -> Poly:
    quot, rem = divmod_(F, p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def monic(F: GF2k, p: Poly) -> Poly:
    if not p or p[-1] == 1:
        return p
    return scale(F, p, F.inv(p[-1]))


def gcd(F: GF2k, p: Poly, q: Poly) -> Poly:
    """Monic gcd."""
    while q:
        p, q = q, mod(F, p, q)
    return monic(F, p)


def xgcd(F: GF2k, p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with u*p + v*q = g monic."""
    r0, r1 = p, q
    u0, u1 = ONE, ZERO
    v0, v1 = ZERO, ONE
    while r1:
        quot, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, add(u0, mul(F, quot, u1))
        v0, v1 = v1, add(v0, mul(F, quot, v1))
    if not r0:
        return ZERO, ZERO, ZERO
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, u0, c), scale(F, v0, c)


def invmod(F: GF2k, p: Poly, m: Poly) -> Poly:
    g, u, _ = xgcd(F, p, m)
    if g != ONE:
        raise ZeroDivisionError("not invertible modulo the given polynomial")
    return mod(F, u, m)


def evaluate(F: GF2k, p: Poly, x: int) -> int:
    r = 0
    for c in reversed(p):
        r = F.mul(r, x) ^ c
    return r


def derivative(p: Poly) -> Poly:
    # characteristic 2: only odd-degree terms survive
    return strip(p[i] if i % 2 else 0 for i in range(1, len(p)))


def compose(F: GF2k, p: Poly, q: Poly) -> Poly:
    r: Poly = ()
    for c in reversed(p):
        r = add(mul(F, r, q), const(c))
    return r


def even_odd(F: GF2k, p: Poly) -> tuple[Poly, Poly]:
    """Split p = P0^2 + s*P1^2 with coefficients taken by inverse Frobenius."""
    ev = strip(F.sqrt(p[i]) for i in range(0, len(p), 2))
    od = strip(F.sqrt(p[i]) for i in range(1, len(p), 2))
    return ev, od


def sqrt_exact(F: GF2k, p: Poly) -> Poly | None:
    """Square root in GF(2^k)[s] if p is a square, else None."""
    if any(p[i] for i in range(1, len(p), 2)):
        return None
    return even_odd(F, p)[0]


def root_exact(F: GF2k, p: Poly, e: int) -> Poly | None:
    """2^e-th root in GF(2^k)[s], or None."""
    for _ in range(e):
        if p is None:
            return None
        p = sqrt_exact(F, p)
    return p


def powmod(F: GF2k, p: Poly, n: int, m: Poly) -> Poly:
    r = ONE
    p = mod(F, p, m)
    while n:
        if n & 1:
            r = mod(F, mul(F, r, p), m)
        n >>= 1
        if n:
            p = mod(F, sqr(F, p), m)
    return r


def squarefree_factorization(F: GF2k, f: Poly) -> dict[int, Poly]:
    """Map multiplicity e -> monic squarefree product of the primes of
    exactly that multiplicity in f (f nonconstant, any leading coefficient)."""
    out: dict[int, Poly] = {}

    def rec(f: Poly, mult: int) -> None:
        f = monic(F, f)
        if len(f) <= 1:
            return
        c = gcd(F, f, derivative(f))
        w = exact_div(F, f, c)
        i = 1
        while len(w) > 1:
            y = gcd(F, w, c)
            z = exact_div(F, w, y)
            if len(z) > 1:
                out[i * mult] = z
            i += 1
            w = y
            c = exact_div(F, c, y)
        if len(c) > 1:
            # what is left is a perfect square in characteristic 2
            rec(sqrt_exact(F, c), 2 * mult)

    rec(f, 1)
    return out


def sqrt_mod_squarefree(F: GF2k, r: Poly, D: Poly) -> Poly:
    """Square root of r in GF(2^k)[s]/(D), D monic squarefree.

    With D = D0^2 + s*D1^2 we have D' = D1^2 coprime to D, hence
    s = (D0/D1)^2 modulo D.
    """
    if len(D) <= 1:
        return ()
    r = mod(F, r, D)
    r0, r1 = even_odd(F, r)
    d0, d1 = even_odd(F, D)
    sqrt_s = mod(F, mul(F, d0, invmod(F, d1, D)), D)
    return mod(F, add(r0, mul(F, sqrt_s, r1)), D)


# -- roots over finite fields --------------------------------------------------


def distinct_degree_degrees(F: GF2k, f: Poly) -> set[int]:
    """Degrees of the irreducible factors of squarefree monic f."""
    f = monic(F, f)
    degs: set[int] = set()
    h = X
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = powmod(F, h, F.order, f)
        g = gcd(F, f, add(h, X))
        if len(g) > 1:
            degs.add(i)
            f = exact_div(F, f, g)
            h = mod(F, h, f)
    if len(f) > 1:
        degs.add(len(f) - 1)
    return degs


def roots(F: GF2k, f: Poly, rng: random.Random | None = None) -> list[int]:
    """Distinct roots of f lying in F, sorted."""
    if not f:
        raise ValueError("zero polynomial has every element as root")
    f = monic(F, f)
    if len(f) <= 1:
        return []
    if F.order <= 64:
        return [a for a in F.elements() if evaluate(F, f, a) == 0]
    # isolate the product of linear factors: gcd(f, x^q - x)
    g = gcd(F, f, add(powmod(F, X, F.order, f), X))
    rng = rng or random.Random(0x5EED)
    out: list[int] = []
    _split_linear(F, g, rng, out)
    return sorted(out)


def _split_linear(F: GF2k, g: Poly, rng: random.Random, out: list[int]) -> None:
    if len(g) <= 1:
        return
    if len(g) == 2:
        out.append(F.div(g[0], g[1]))
        return
    while True:
        delta = rng.randrange(1, F.order)
        # trace polynomial Tr(delta*x) mod g splits the roots by trace value
        t = ()
        y = mod(F, (0, delta), g)
        for _ in range(F.k):
            t = add(t, y)
            y = mod(F, sqr(F, y), g)
        h = gcd(F, g, t)
        if 1 < len(h) < len(g):
            _split_linear(F, h, rng, out)
            _split_linear(F, exact_div(F, g, h), rng, out)
            return


def random_poly(F: GF2k, degree: int, rng: random.Random) -> Poly:
    return strip(rng.randrange(F.order) for _ in range(degree + 1))
