"""Text syntax for field elements, rational functions and models.

GF(2^k) elements are polynomials in the generator ``g`` ("g^2+g+1");
elements of K = GF(2^k)(s) are quotients of polynomials in ``s`` with such
coefficients ("(g*s^3+1)/(s^2+s)").  Printing is canonical, so
``parse(format(v)) == v`` and ``format(parse(format(v))) == format(v)``.
"""

from __future__ import annotations

import re

from . import upoly
from .gf import GF2k, format_gf2_poly


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()=]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent over a small algebra interface."""

    def __init__(self, text: str, algebra):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.alg = algebra

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op: str):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", self.text, t[2])

    def parse(self, allow_eq: bool = False):
        value = self.expr()
        if allow_eq and self.peek()[:2] == ("op", "="):
            self.take()
            rhs = self.expr()
            value = self.alg.add(value, rhs)
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected token", self.text, t[2])
        return value

    def expr(self):
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            self.take()
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            self.take()
            value = self.alg.add(value, self.term())
        return value

    def term(self):
        value = self.power()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()
            rhs = self.power()
            if op[1] == "*":
                value = self.alg.mul(value, rhs)
            else:
                try:
                    value = self.alg.div(value, rhs)
                except ZeroDivisionError:
                    raise ParseError("division by zero", self.text, op[2]) from None
        return value

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            t = self.take()
            if t[0] != "num":
                raise ParseError("exponent must be a non-negative integer", self.text, t[2])
            base = self.alg.pow(base, int(t[1]))
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return self.alg.number(int(t[1]))
        if t[0] == "name":
            v = self.alg.symbol(t[1])
            if v is None:
                raise ParseError(f"unknown symbol {t[1]!r}", self.text, t[2])
            return v
        if t[:2] == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        if t[:2] == ("op", "-"):
            return self.atom()
        raise ParseError("unexpected token", self.text, t[2])


class _GFAlgebra:
    def __init__(self, F: GF2k):
        self.F = F

    def number(self, n):
        return n & 1

    def symbol(self, name):
        if name != "g":
            return None
        return 2 % self.F.modulus if self.F.k > 1 else self.F.modulus & 1

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return self.F.mul(a, b)

    def div(self, a, b):
        return self.F.div(a, b)

    def pow(self, a, n):
        return self.F.pow(a, n)


class _RatAlgebra:
    def __init__(self, F: GF2k, var: str = "s"):
        from .ratfunc import RatFunc

        self.F = F
        self.R = RatFunc
        self.var = var

    def number(self, n):
        return self.R.constant(self.F, n & 1)

    def symbol(self, name):
        if name == "g":
            return self.R.constant(self.F, _GFAlgebra(self.F).symbol("g"))
        if name == self.var:
            return self.R.s(self.F)
        return None

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def pow(self, a, n):
        return a**n


def parse_gf(F: GF2k, text: str) -> int:
    return _Parser(text, _GFAlgebra(F)).parse()


def parse_ratfunc(F: GF2k, text: str, var: str = "s"):
    return _Parser(text, _RatAlgebra(F, var)).parse()


def _format_coeff_times(c: str, mono: str) -> str:
    if mono == "":
        return c
    if c == "1":
        return mono
    if "+" in c:
        return f"({c})*{mono}"
    return f"{c}*{mono}"


def format_poly(F: GF2k, p: upoly.Poly, var: str = "s") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            terms.append(_format_coeff_times(format_gf2_poly(p[i]), mono))
    return "+".join(terms)


def _wrap(s: str) -> str:
    return f"({s})" if ("+" in s or "*" in s) else s


def format_ratfunc(f, var: str = "s") -> str:
    num = format_poly(f.field, f.num, var)
    if f.den == upoly.ONE:
        return num
    return f"{_wrap(num)}/{_wrap(format_poly(f.field, f.den, var))}"


def format_coeff(f) -> str:
    """A K element as a factor inside a larger product."""
    s = str(f)
    return f"({s})" if any(ch in s for ch in "+*/") else s


class _Gf2PolyAlgebra:
    """Binary polynomials in g without reduction (for field moduli)."""

    def number(self, n):
        return n & 1

    def symbol(self, name):
        return 2 if name == "g" else None

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        from .gf import clmul

        return clmul(a, b)

    def div(self, a, b):
        raise ZeroDivisionError("division is not allowed in a modulus")

    def pow(self, a, n):
        r = 1
        for _ in range(n):
            r = self.mul(r, a)
        return r


def parse_binary_poly(text: str) -> int:
    return _Parser(text, _Gf2PolyAlgebra()).parse()


class _BivariateAlgebra:
    """Sparse polynomials {(i, j): c} in x, y over K."""

    def __init__(self, F: GF2k):
        self.rat = _RatAlgebra(F)

    @staticmethod
    def _clean(d):
        return {m: c for m, c in d.items() if c}

    def number(self, n):
        return self._clean({(0, 0): self.rat.number(n)})

    def symbol(self, name):
        if name == "x":
            return {(1, 0): self.rat.number(1)}
        if name == "y":
            return {(0, 1): self.rat.number(1)}
        v = self.rat.symbol(name)
        return None if v is None else {(0, 0): v}

    def add(self, a, b):
        out = dict(a)
        for m, c in b.items():
            out[m] = out[m] + c if m in out else c
        return self._clean(out)

    def mul(self, a, b):
        out: dict = {}
        for (i, j), c in a.items():
            for (k, l), d in b.items():
                m = (i + k, j + l)
                out[m] = out[m] + c * d if m in out else c * d
        return self._clean(out)

    def div(self, a, b):
        if set(b) != {(0, 0)}:
            if not b:
                raise ZeroDivisionError("division by zero")
            raise ValueError("can only divide by elements of K")
        inv = b[(0, 0)].inverse()
        return {m: c * inv for m, c in a.items()}

    def pow(self, a, n):
        r = self.number(1)
        for _ in range(n):
            r = self.mul(r, a)
        return r


def parse_bivariate(F: GF2k, text: str) -> dict:
    """Parse an equation or expression in x, y; "lhs = rhs" means lhs + rhs."""
    p = _Parser(text, _BivariateAlgebra(F))
    try:
        return p.parse(allow_eq=True)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), text, p.toks[max(p.i - 1, 0)][2]) from None


def format_kpoly(coeffs, var: str = "x") -> str:
    """A polynomial in x with K coefficients, highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if mono == "":
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{format_coeff(c)}*{mono}")
    return "+".join(terms) if terms else "0"
