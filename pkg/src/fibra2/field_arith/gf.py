"""Binary finite fields GF(2^k).

Elements are plain ints whose bits are the coefficients of a polynomial in
the generator ``g`` reduced modulo the field modulus.  Addition is xor.
The :class:`GF2k` object carries the multiplication tables; the thin
:class:`GFElement` wrapper exists for the public API and for printing.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

_TABLE_BITS = 16


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials stored as ints."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def clmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def clgcd(a: int, b: int) -> int:
    while b:
        a, b = b, clmod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_gf2(f: int) -> bool:
    """Rabin's irreducibility test for a binary polynomial."""
    k = f.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True

    def frob_power(e: int) -> int:
        # x^(2^e) mod f
        r = 0b10
        for _ in range(e):
            r = clmod(clmul(r, r), f)
        return r

    if frob_power(k) != clmod(0b10, f):
        return False
    for p in _prime_factors(k):
        if clgcd(f, frob_power(k // p) ^ 0b10) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(k: int) -> int:
    """Smallest irreducible binary polynomial of degree k with constant term 1."""
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    for f in range((1 << k) | 1, 1 << (k + 1), 2):
        if is_irreducible_gf2(f):
            return f
    raise AssertionError("unreachable")


def format_gf2_poly(v: int, var: str = "g") -> str:
    if v == 0:
        return "0"
    terms = []
    for i in range(v.bit_length() - 1, -1, -1):
        if (v >> i) & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return "+".join(terms)


class GF2k:
    """The field GF(2)[g]/(modulus)."""

    def __init__(self, k: int, modulus: int | None = None):
        if modulus is None:
            modulus = default_modulus(k)
        if modulus.bit_length() - 1 != k:
            raise ValueError(f"modulus {modulus:#b} does not have degree {k}")
        if not is_irreducible_gf2(modulus):
            raise ValueError(f"modulus {format_gf2_poly(modulus)} is not irreducible")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._sqrt: list[int] | None = None
        self._as_basis: dict[int, tuple[int, int]] | None = None
        if k <= _TABLE_BITS:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        return clmod(clmul(a, b), self.modulus)

    def _build_tables(self) -> None:
        q1 = self.order - 1
        if q1 == 1:
            self._exp, self._log = [1, 1], [0, 0]
            self._sqrt = [0, 1]
            return
        factors = _prime_factors(q1)
        for cand in range(2, self.order):
            if all(self._slow_pow(cand, q1 // p) != 1 for p in factors):
                prim = cand
                break
        exp = [0] * (2 * q1)
        log = [0] * self.order
        x = 1
        for i in range(q1):
            exp[i] = exp[i + q1] = x
            log[x] = i
            x = self._slow_mul(x, prim)
        self._exp, self._log = exp, log
        sq = [0] * self.order
        for a in range(self.order):
            sq[self.mul(a, a)] = a
        self._sqrt = sq

    def _slow_pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return r

    # -- arithmetic -----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * n) % (self.order - 1)]
        return self._slow_pow(a, n)

    def sqrt(self, a: int) -> int:
        """Inverse Frobenius; unique because squaring is bijective."""
        if self._sqrt is not None:
            return self._sqrt[a]
        for _ in range(self.k - 1):
            a = self.sqr(a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2), returned as 0 or 1."""
        t, x = 0, a
        for _ in range(self.k):
            t ^= x
            x = self.sqr(x)
        return t

    def solve_as(self, c: int) -> int | None:
        """Return w with w^2 + w = c (the root with constant bit 0), or None."""
        if self.trace(c):
            return None
        if self._as_basis is None:
            self._as_basis = self._as_echelon()
        w = 0
        while c:
            img_pre = self._as_basis.get(c.bit_length() - 1)
            if img_pre is None:
                raise AssertionError("trace-zero element outside image of w^2+w")
            c ^= img_pre[0]
            w ^= img_pre[1]
        return w & ~1

    def _as_echelon(self) -> dict[int, tuple[int, int]]:
        # echelon form of the GF(2)-linear map w -> w^2 + w, keyed by top bit
        basis: dict[int, tuple[int, int]] = {}
        for i in range(self.k):
            pre = 1 << i
            img = self.sqr(pre) ^ pre
            while img and (img.bit_length() - 1) in basis:
                bimg, bpre = basis[img.bit_length() - 1]
                img ^= bimg
                pre ^= bpre
            if img:
                basis[img.bit_length() - 1] = (img, pre)
        return basis

    # -- misc -----------------------------------------------------------------

    def elements(self):
        return range(self.order)

    def element(self, value: int | str) -> GFElement:
        if isinstance(value, str):
            from .text import parse_gf

            return GFElement(self, parse_gf(self, value))
        return GFElement(self, value)

    def format(self, a: int) -> str:
        return format_gf2_poly(a)

    def __repr__(self) -> str:
        return f"GF(2^{self.k})[{format_gf2_poly(self.modulus)}]"

    def __reduce__(self):
        return (gf, (self.k, self.modulus))


@functools.lru_cache(maxsize=None)
def gf(k: int, modulus: int | None = None) -> GF2k:
    """Shared field instance for a (degree, modulus) pair."""
    if modulus is None:
        modulus = default_modulus(k)
    return _gf_cached(k, modulus)


@functools.lru_cache(maxsize=None)
def _gf_cached(k: int, modulus: int) -> GF2k:
    return GF2k(k, modulus)


@dataclass(frozen=True)
class GFElement:
    field: GF2k
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} is not an element of {self.field!r}")

    def _coerce(self, other) -> int:
        if isinstance(other, GFElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        if other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return GFElement(self.field, self.value ^ o)

    __radd__ = __sub__ = __rsub__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        return GFElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return GFElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, n: int):
        return GFElement(self.field, self.field.pow(self.value, n))

    def __neg__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def sqrt(self) -> GFElement:
        return GFElement(self.field, self.field.sqrt(self.value))

    @property
    def coefficients(self) -> list[int]:
        """Bits over GF(2), lowest degree first, length k."""
        return [(self.value >> i) & 1 for i in range(self.field.k)]

    def __str__(self) -> str:
        return format_gf2_poly(self.value)


def gf_sqrt(x: GFElement) -> GFElement:
    return x.sqrt()
