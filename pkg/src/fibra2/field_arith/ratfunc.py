"""The rational function field K = GF(2^k)(s) and its field descriptor."""

from __future__ import annotations

from dataclasses import dataclass

from . import upoly
from .extension import Embedding
from .gf import GF2k, format_gf2_poly, gf
from .upoly import Poly


@dataclass(frozen=True)
class FieldDescriptor:
    """Describes K: either GF(2^k) itself or GF(2^k)(s)."""

    k: int = 1
    modulus: int | None = None
    has_transcendental: bool = True
    characteristic: int = 2

    def __post_init__(self):
        if self.modulus is None:
            object.__setattr__(self, "modulus", gf(self.k).modulus)

    @property
    def constants(self) -> GF2k:
        return gf(self.k, self.modulus)

    @classmethod
    def of(cls, F: GF2k, has_transcendental: bool = True) -> "FieldDescriptor":
        return cls(F.k, F.modulus, has_transcendental)

    def to_json(self) -> dict:
        return {
            "characteristic": 2,
            "k": self.k,
            "modulus": format_gf2_poly(self.modulus),
            "transcendental": self.has_transcendental,
        }


class RatFunc:
    """Element num/den of GF(2^k)(s), kept reduced with monic denominator."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: GF2k, num: Poly = (), den: Poly = upoly.ONE, *, reduced=False):
        self.field = field
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if not num:
                den = upoly.ONE
            else:
                if len(den) > 1:
                    g = upoly.gcd(field, num, den)
                    if len(g) > 1:
                        num = upoly.exact_div(field, num, g)
                        den = upoly.exact_div(field, den, g)
                lead = den[-1]
                if lead != 1:
                    inv = field.inv(lead)
                    num = upoly.scale(field, num, inv)
                    den = upoly.scale(field, den, inv)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, field: GF2k, a: int) -> "RatFunc":
        return cls(field, upoly.const(a), upoly.ONE, reduced=True)

    @classmethod
    def poly(cls, field: GF2k, p: Poly) -> "RatFunc":
        return cls(field, upoly.strip(p), upoly.ONE, reduced=True)

    @classmethod
    def s(cls, field: GF2k) -> "RatFunc":
        return cls(field, upoly.X, upoly.ONE, reduced=True)

    @classmethod
    def parse(cls, field: GF2k, text: str) -> "RatFunc":
        from .text import parse_ratfunc

        return parse_ratfunc(field, text)

    def zero(self) -> "RatFunc":
        return RatFunc(self.field, (), upoly.ONE, reduced=True)

    def one(self) -> "RatFunc":
        return RatFunc(self.field, upoly.ONE, upoly.ONE, reduced=True)

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0] if self.num else 0

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    # -- arithmetic -----------------------------------------------------------

    def _other(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise ValueError("rational functions over different constant fields")
            return other
        if isinstance(other, int) and other in (0, 1):
            return RatFunc.constant(self.field, other)
        return NotImplemented

    def __add__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is NotImplemented:
            return o
        F = self.field
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if len(self.den) == 1:
                return RatFunc(F, upoly.add(self.num, o.num), upoly.ONE, reduced=True)
            return RatFunc(F, upoly.add(self.num, o.num), self.den)
        g = upoly.gcd(F, self.den, o.den)
        if len(g) == 1:
            num = upoly.add(upoly.mul(F, self.num, o.den), upoly.mul(F, o.num, self.den))
            return RatFunc(F, num, upoly.mul(F, self.den, o.den), reduced=True)
        d1 = upoly.exact_div(F, self.den, g)
        d2 = upoly.exact_div(F, o.den, g)
        num = upoly.add(upoly.mul(F, self.num, d2), upoly.mul(F, o.num, d1))
        return RatFunc(F, num, upoly.mul(F, upoly.mul(F, d1, d2), g))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "RatFunc":
        return self

    def __mul__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is NotImplemented:
            return o
        F = self.field
        if not self.num or not o.num:
            return self.zero()
        if len(self.den) == 1 and len(o.den) == 1:
            return RatFunc(F, upoly.mul(F, self.num, o.num), upoly.ONE, reduced=True)
        # cross-cancel so the product is already reduced
        g1 = upoly.gcd(F, self.num, o.den)
        g2 = upoly.gcd(F, o.num, self.den)
        n1 = upoly.exact_div(F, self.num, g1) if len(g1) > 1 else self.num
        d2 = upoly.exact_div(F, o.den, g1) if len(g1) > 1 else o.den
        n2 = upoly.exact_div(F, o.num, g2) if len(g2) > 1 else o.num
        d1 = upoly.exact_div(F, self.den, g2) if len(g2) > 1 else self.den
        num = upoly.mul(F, n1, n2)
        den = upoly.mul(F, d1, d2)
        lead = den[-1]
        if lead != 1:
            inv = F.inv(lead)
            num = upoly.scale(F, num, inv)
            den = upoly.scale(F, den, inv)
        return RatFunc(F, num, den, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        F = self.field
        num, den = self.den, self.num
        lead = den[-1]
        if lead != 1:
            inv = F.inv(lead)
            num = upoly.scale(F, num, inv)
            den = upoly.scale(F, den, inv)
        return RatFunc(F, num, den, reduced=True)

    def __truediv__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return self._other(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        r = self.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b.frobenius()
        return r

    def frobenius(self) -> "RatFunc":
        """The square, computed coefficientwise (stays reduced)."""
        F = self.field
        return RatFunc(F, upoly.sqr(F, self.num), upoly.sqr(F, self.den), reduced=True)

    def scale_const(self, a: int) -> "RatFunc":
        if a == 0:
            return self.zero()
        return RatFunc(self.field, upoly.scale(self.field, self.num, a), self.den, reduced=True)

    # -- structure ------------------------------------------------------------

    def valuation_at_zero(self) -> int:
        """Order of vanishing at s = 0 (used for debugging and tests)."""
        if not self.num:
            raise ValueError("valuation of zero")

        def low(p):
            return next(i for i, c in enumerate(p) if c)

        return low(self.num) - low(self.den)

    def specialize(self, sigma: int) -> int | None:
        """Value at s = sigma in GF(2^k), or None at a pole."""
        F = self.field
        d = upoly.evaluate(F, self.den, sigma)
        if d == 0:
            return None
        return F.div(upoly.evaluate(F, self.num, sigma), d)

    def lift(self, emb: Embedding) -> "RatFunc":
        """Image under a constant field extension."""
        if emb.small is not self.field:
            raise ValueError("embedding does not start at this constant field")
        if emb.big is self.field:
            return self
        m = emb.map
        return RatFunc(
            emb.big,
            tuple(m(c) for c in self.num),
            tuple(m(c) for c in self.den),
            reduced=True,
        )

    # -- comparison / printing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, int) and other in (0, 1):
            return self.den == upoly.ONE and self.num == upoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.k, self.field.modulus, self.num, self.den))
        return self._hash

    def sort_key(self):
        return (len(self.den), self.den, len(self.num), self.num)

    def __str__(self) -> str:
        from .text import format_ratfunc

        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def random_ratfunc(F: GF2k, rng, max_degree: int = 2, p_zero: float = 0.2, p_poly: float = 0.6) -> RatFunc:
    """Random element of GF(2^k)(s); zero with probability ``p_zero``."""
    if rng.random() < p_zero:
        return RatFunc(F)
    num = ()
    while not num:
        num = upoly.random_poly(F, rng.randint(0, max_degree), rng)
    if rng.random() < p_poly:
        return RatFunc(F, num)
    den = upoly.monic(F, upoly.random_poly(F, rng.randint(1, max_degree), rng) or upoly.ONE)
    return RatFunc(F, num, den or upoly.ONE)
