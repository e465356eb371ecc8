"""Local expansions at candidate singular primes and a Rosenlicht genus oracle.

Each candidate singular prime is handled by a named branch.  A branch
designates a Frobenius pullback level, a local parameter ``t`` and an
element (x^2, x^4, y^2, y^4 or y^8) to expand in ``t``.  The expansion is
computed from the branch's algebraic relation by coefficient recursion
(Hensel lifting) or, when the relation is explicit, by direct substitution.
The branch rule then reads the singularity degree off named coefficients.

Branch table (element, local parameter, rule):

    C2-i            z = x^2 in t = z/y       delta = 1 iff lead coefficient not a square
    C2-ii-sq        z = x^2 in t = y + c     delta = 0 (rational, smooth)
    C2-ii-nonsq     X = x^4 in t = y^2 + b0  t^2 coefficient != 0: ramified, delta = 1
    C2-iii-jsq      z = x^2 in t = y + ybar  constant a0 not a square, delta = 1
    C2-iii-jnonsq-in  w^4, w = x + alpha + beta y   ramified, delta = 1
    C2-iii-jnonsq-out residue field grows twice, delta = 1
    D1-b3nz-sq      y^2 in t = x + c^(1/2)   delta = 1 iff constant not a square
    D1-b3nz-nonsq   z^4, z = y + alpha + beta x, t = x^2 + c   delta = 1
    D1-b3z-i        z^8 in t = x^4 + b1      ramified, delta = 2
    D1-b3z-ii       z^4 in t = x^2 + c       delta = 2 if t^2 coefficient != 0 else 0
    D1-b3z-iii      y^2 in t = x + c         2 / 1 / 0 by square classes of t^0, t^2

The C2-iii-jnonsq-out branch needs a0 outside K^2(j1); for K = GF(2^k)(s)
that space is all of K once j1 is not a square, so the branch never fires.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve_model import (
    InseparableNormalForm,
    SeparableNormalForm,
    affine_substitution,
    apply_transformation,
    reduce_to_separable_normal_form,
)
from .field_arith import (
    upoly,
    RatFunc,
    Unsupported,
    in_square_span,
    is_fourth_power_with_witness,
    is_square,
    is_square_with_witness,
    random_ratfunc,
    split_quadratic,
)
from .genus import GenusReport, NotGeometricallyElliptic, PrimeDegree

DEFAULT_N = 12

BRANCHES = (
    "C2-i",
    "C2-ii-sq",
    "C2-ii-nonsq",
    "C2-iii-jsq",
    "C2-iii-jnonsq-out",
    "C2-iii-jnonsq-in",
    "D1-b3nz-sq",
    "D1-b3nz-nonsq",
    "D1-b3z-i",
    "D1-b3z-ii",
    "D1-b3z-iii",
)


# -- gcd-free coefficients ------------------------------------------------------


class _PowerRing:
    """Elements P / L^e of K for a fixed polynomial L.

    The coefficient recursions only ever divide by one fixed element, so all
    intermediate values have denominators dividing a power of L.  Working
    with unreduced numerators avoids a polynomial gcd per operation.
    """

    def __init__(self, F, L):
        self.F, self.L = F, upoly.monic(F, L)
        self._pows = [upoly.ONE]

    @classmethod
    def covering(cls, values, extra=()) -> "_PowerRing":
        """Ring whose denominators cover the given elements and polynomials."""
        F = values[0].field
        L = upoly.ONE
        for d in [v.den for v in values] + list(extra):
            d = upoly.monic(F, d)
            if len(d) > 1:
                g = upoly.gcd(F, L, d)
                L = upoly.mul(F, L, upoly.exact_div(F, d, g))
        return cls(F, L)

    def lpow(self, e: int):
        while len(self._pows) <= e:
            self._pows.append(upoly.mul(self.F, self._pows[-1], self.L))
        return self._pows[e]

    def lift(self, r: RatFunc) -> "_Frac":
        if isinstance(r, _Frac):
            return r
        F, den, e = self.F, r.den, 0
        rest = den
        while len(rest) > 1:
            g = upoly.gcd(F, rest, self.L)
            if len(g) == 1:
                raise ValueError("denominator not covered by the coefficient ring")
            rest = upoly.exact_div(F, rest, g)
            e += 1
        P = upoly.mul(F, r.num, upoly.exact_div(F, self.lpow(e), den))
        if rest != upoly.ONE:
            P = upoly.scale(F, P, F.inv(rest[0]))
        return _Frac(self, P, e)


class _Frac:
    __slots__ = ("ring", "P", "e")

    def __init__(self, ring: _PowerRing, P, e: int):
        self.ring, self.P, self.e = ring, P, e if P else 0

    @property
    def field(self):
        return self.ring.F

    def __bool__(self) -> bool:
        return bool(self.P)

    def zero(self) -> "_Frac":
        return _Frac(self.ring, (), 0)

    def __add__(self, other) -> "_Frac":
        o = self.ring.lift(other)
        if not o.P:
            return self
        if not self.P:
            return o
        F, e = self.ring.F, max(self.e, o.e)
        a = self.P if self.e == e else upoly.mul(F, self.P, self.ring.lpow(e - self.e))
        b = o.P if o.e == e else upoly.mul(F, o.P, self.ring.lpow(e - o.e))
        return _Frac(self.ring, upoly.add(a, b), e)

    __radd__ = __add__

    def __mul__(self, other) -> "_Frac":
        o = self.ring.lift(other)
        if not self.P or not o.P:
            return self.zero()
        return _Frac(self.ring, upoly.mul(self.ring.F, self.P, o.P), self.e + o.e)

    __rmul__ = __mul__

    def frobenius(self) -> "_Frac":
        return _Frac(self.ring, upoly.sqr(self.ring.F, self.P), 2 * self.e)

    def to_ratfunc(self) -> RatFunc:
        return RatFunc(self.ring.F, self.P, self.ring.lpow(self.e))

    def __str__(self) -> str:
        return str(self.to_ratfunc())


def _reduced(c):
    return c.to_ratfunc() if isinstance(c, _Frac) else c


# -- truncated Laurent series --------------------------------------------------


@dataclass(frozen=True)
class LaurentSeries:
    """sum c_i t^i for valuation <= i < N; exponents >= N are unknown."""

    valuation: int
    coeffs: tuple
    N: int

    @classmethod
    def make(cls, field_, valuation: int, coeffs, N: int) -> "LaurentSeries":
        coeffs = list(coeffs)[: max(N - valuation, 0)]
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            valuation += 1
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            return cls(N, (), N)._with_field(field_)
        return cls(valuation, tuple(coeffs), N)

    def _with_field(self, field_):
        object.__setattr__(self, "_field", field_)
        return self

    @classmethod
    def from_poly(cls, coeffs, N: int) -> "LaurentSeries":
        return cls.make(coeffs[0].field, 0, coeffs, N)

    @property
    def field(self):
        return self.coeffs[0].field if self.coeffs else self._field

    def is_zero(self) -> bool:
        return not self.coeffs

    def _raw(self, i: int):
        j = i - self.valuation
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return None

    def coeff(self, i: int) -> RatFunc:
        if i >= self.N:
            raise IndexError(f"coefficient t^{i} lies beyond the truncation order {self.N}")
        c = self._raw(i)
        return RatFunc.constant(self.field, 0) if c is None else _reduced(c)

    def order(self) -> int:
        """Valuation, or the truncation order for a series known to vanish."""
        return self.N if self.is_zero() else self.valuation

    def reduced(self) -> "LaurentSeries":
        """The same series with every coefficient as a reduced RatFunc."""
        return LaurentSeries.make(self.field, self.valuation, [_reduced(c) for c in self.coeffs], self.N)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        N = min(self.N, other.N)
        lo = min(self.order(), other.order())
        out = []
        for i in range(lo, N):
            a, b = self._raw(i), other._raw(i)
            out.append(b if a is None else a if b is None else a + b)
        zero = RatFunc.constant(self.field, 0)
        return LaurentSeries.make(self.field, lo, [zero if c is None else c for c in out], N)

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return LaurentSeries.make(self.field, self.valuation, [c * other for c in self.coeffs], self.N)
        if self.is_zero() or other.is_zero():
            N = min(self.N + other.order(), other.N + self.order())
            return LaurentSeries.make(self.field, N, (), N)
        v = self.valuation + other.valuation
        N = min(self.N + other.valuation, other.N + self.valuation)
        out = [None] * max(min(N - v, len(self.coeffs) + len(other.coeffs) - 1), 0)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                if b:
                    p = a * b
                    out[i + j] = p if out[i + j] is None else out[i + j] + p
        zero = RatFunc.constant(self.field, 0)
        return LaurentSeries.make(self.field, v, [zero if c is None else c for c in out], N)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentSeries":
        r = LaurentSeries.make(self.field, 0, [RatFunc.constant(self.field, 1)], 10**9)
        for _ in range(n):
            r = r * self
        return r

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries.make(self.field, self.valuation + k, self.coeffs, self.N + k)

    def square_coefficients(self) -> "LaurentSeries":
        """Frobenius on coefficients, exponents unchanged."""
        return LaurentSeries.make(self.field, self.valuation, [c.frobenius() for c in self.coeffs], self.N)

    def dump(self) -> str:
        cs = ", ".join(f"c[{self.valuation + i}]={_reduced(c)}" for i, c in enumerate(self.coeffs))
        return f"val={self.order()}; {cs}; N={self.N}"

    def __str__(self) -> str:
        return self.dump()


def constant_series(c: RatFunc, N: int = 10**9) -> LaurentSeries:
    return LaurentSeries.make(c.field, 0, [c], N)


def t_plus(c: RatFunc, N: int) -> LaurentSeries:
    """The series t + c."""
    return LaurentSeries.make(c.field, 0, [c, RatFunc.constant(c.field, 1)], N)


def hensel(G: dict, u0: RatFunc, n_terms: int, *, reduce: bool = True, cover=()) -> list:
    """Power series root U = u0 + u1 t + ... of sum_j G[j](t) U^j = 0.

    ``G[j]`` lists the t-coefficients of the coefficient of U^j.  The root
    must be simple at t = 0, i.e. dG/dU(0, u0) != 0.  With ``reduce=False``
    the coefficients come back unreduced (cheap to combine further); their
    denominators then also cover the elements listed in ``cover``.
    """
    F = u0.field
    zero = RatFunc.constant(F, 0)
    top = max(G)

    def gcoef(j, m):
        g = G.get(j, ())
        return g[m] if m < len(g) else zero

    if gcoef(0, 0) + sum((gcoef(j, 0) * u0**j for j in range(1, top + 1)), zero):
        raise ValueError("malformed branch: the starting coefficient is not a root")
    D = sum((gcoef(j, 0) * u0 ** (j - 1) for j in range(1, top + 1, 2)), zero)
    if not D:
        raise ValueError("malformed branch: the root is not simple, recursion stalls")
    flat = [c for g in G.values() for c in g if c] + [u0] + [c for c in cover if c]
    R = _PowerRing.covering(flat, extra=[D.num])
    Gr = {j: [R.lift(c) for c in g] for j, g in G.items()}
    u0r, inv_d = R.lift(u0), R.lift(D.inverse())
    z = _Frac(R, (), 0)
    u0_pows = [R.lift(RatFunc.constant(F, 1))]
    for _ in range(top):
        u0_pows.append(u0_pows[-1] * u0r)

    U = [u0r]
    pw = {j: [u0_pows[j]] for j in range(top + 1)}
    for n in range(1, n_terms):
        pw[0].append(z)
        pw[1].append(z)  # U_n still counts as 0
        for j in range(2, top + 1):
            acc = pw[j - 1][n] * u0r
            for i in range(1, n):
                a = pw[j - 1][i]
                if a and U[n - i]:
                    acc = acc + a * U[n - i]
            pw[j].append(acc)
        r = z
        for j, g in Gr.items():
            for m in range(min(len(g), n + 1)):
                if g[m] and pw[j][n - m]:
                    r = r + g[m] * pw[j][n - m]
        un = r * inv_d
        U.append(un)
        if un:
            for j in range(1, top + 1, 2):
                pw[j][n] = pw[j][n] + u0_pows[j - 1] * un
    return [_reduced(c) for c in U] if reduce else U


def eval_relation(G: dict, X: LaurentSeries) -> LaurentSeries:
    """sum_j G[j](t) X^j as a truncated series."""
    F = X.field
    total = None
    Xj = None
    for j in range(max(G) + 1):
        Xj = constant_series(RatFunc.constant(F, 1)) if j == 0 else Xj * X
        g = G.get(j)
        if not g or not any(g):
            continue
        term = LaurentSeries.make(F, 0, g, 10**9) * Xj
        total = term if total is None else total + term
    return total


def _horner(coeffs, X: LaurentSeries) -> LaurentSeries:
    F = X.field
    r = constant_series(RatFunc.constant(F, 0), X.N)
    for c in reversed(coeffs):
        r = r * X + constant_series(c)
    return r


def _binomial_shift(coeffs, c: RatFunc, N: int) -> LaurentSeries:
    """sum_i coeffs[i] (t + c)^i by Lucas' theorem (binomials mod 2)."""
    F = c.field
    out = [RatFunc.constant(F, 0)] * len(coeffs)
    for i, b in enumerate(coeffs):
        if not b:
            continue
        for j in range(i + 1):
            if (j & i) == j:  # C(i, j) odd
                out[j] = out[j] + b * c ** (i - j)
    return LaurentSeries.make(F, 0, out, N)


# -- prime specifications --------------------------------------------------------


@dataclass(frozen=True)
class PrimeSpec:
    branch: str
    level: int
    center: str
    local_parameter: str
    params: dict = field(compare=False)


@dataclass(frozen=True)
class Expansion:
    spec: PrimeSpec
    series: LaurentSeries  # the designated element
    derived: LaurentSeries | None  # w^4, z^4 or z^8 when the branch needs it
    _residual: object = field(repr=False, compare=False)

    @property
    def residual(self) -> LaurentSeries:
        """The defining relation evaluated at the truncated series."""
        return self._residual()


def _sep_relation(spec: PrimeSpec) -> tuple[dict, RatFunc, int]:
    """(G, u0, shift) with the designated element equal to t^shift * U."""
    p = spec.params
    F = p["b6"].field
    z, one = RatFunc.constant(F, 0), RatFunc.constant(F, 1)
    b0, b4, b6 = p["b0"], p["b4"], p["b6"]
    if spec.branch == "C2-i":
        # w = t^2 z: w^2 + t^3 w + b6 w^3 + b4 t^2 w^2 + b0 t^6 = 0
        return {0: [z] * 6 + [b0], 1: [z, z, z, one], 2: [one, z, b4], 3: [b6]}, b6.inverse(), -2
    if spec.branch == "C2-ii-sq":
        c = p["c"]
        return {0: [z, z, one], 1: [c, one], 2: [b4], 3: [b6]}, z, 0
    if spec.branch == "C2-ii-nonsq":
        return {0: [z, z, one], 1: [b0, one], 2: [b4.frobenius()], 3: [b6.frobenius()]}, z, 0
    a0 = p["a0"]
    if spec.branch == "C2-iii-jsq":
        yb = p["ybar"]
        c0 = yb.frobenius() + a0 * yb + b0
        return {0: [c0, a0, one], 1: [yb, one], 2: [b4], 3: [b6]}, a0, 0
    if spec.branch in ("C2-iii-jnonsq-in", "C2-iii-jnonsq-out"):
        y0 = p["Y0"]
        a02 = a0.frobenius()
        c0 = y0.frobenius() + a02 * y0 + b0.frobenius()
        G = {0: [c0, a02, one], 1: [y0, one], 2: [b4.frobenius()], 3: [b6.frobenius()]}
        return G, a02, 0
    raise Unsupported(f"branch {spec.branch!r} is not catalogued")


def _displayed_relation(spec: PrimeSpec, G: dict, shift: int) -> dict:
    """The relation in the designated element itself (polynomial in t)."""
    if shift == 0:
        return G
    # C2-i: z^2 + t z + t^2 (b6 z^3 + b4 z^2 + b0) = 0
    p = spec.params
    F = p["b6"].field
    z, one = RatFunc.constant(F, 0), RatFunc.constant(F, 1)
    return {0: [z, z, p["b0"]], 1: [z, one], 2: [one, z, p["b4"]], 3: [z, z, p["b6"]]}


def expand_local_series(nf, spec: PrimeSpec, N: int = DEFAULT_N) -> Expansion:
    if N < 6:
        raise ValueError("truncation order must be at least 6")
    if spec.branch.startswith("C2"):
        G, u0, shift = _sep_relation(spec)
        cover = [spec.params.get(k) for k in ("alpha", "beta")]
        cover = [c.frobenius().frobenius() for c in cover if c is not None]
        U = hensel(G, u0, N - shift, reduce=False, cover=cover)
        series = LaurentSeries.make(u0.field, shift, U, N)
        rel = _displayed_relation(spec, G, shift)
        derived = None
        if spec.branch == "C2-iii-jnonsq-in":
            p = spec.params
            al, be = p["alpha"], p["beta"]
            y4 = t_plus(p["Y0"], N) * t_plus(p["Y0"], N)
            derived = series + constant_series(al.frobenius().frobenius()) + y4 * be.frobenius().frobenius()
        return Expansion(spec, series, derived, lambda: eval_relation(rel, series))
    return _expand_d1(spec, N)


def _expand_d1(spec: PrimeSpec, N: int) -> Expansion:
    p = spec.params
    b = p["b"]
    F = b[0].field
    br = spec.branch
    if br in ("D1-b3nz-sq", "D1-b3z-iii"):
        r = p["r"]
        series = _binomial_shift(b, r, N)  # y^2 with x = t + r
        return Expansion(spec, series, None, lambda: series + _horner(b, t_plus(r, N)))
    if br in ("D1-b3nz-nonsq", "D1-b3z-ii"):
        c = p["c"]
        b2 = [v.frobenius() for v in b]
        series = _binomial_shift(b2, c, N)  # y^4 with x^2 = t + c
        derived = None
        if "alpha" in p:
            al4 = p["alpha"].frobenius().frobenius()
            be4 = p["beta"].frobenius().frobenius()
            x4 = t_plus(c, N) * t_plus(c, N)
            derived = series + constant_series(al4) + x4 * be4
        return Expansion(spec, series, derived, lambda: series + _horner(b2, t_plus(c, N)))
    if br == "D1-b3z-i":
        b1 = p["b1"]
        b4_ = [v.frobenius().frobenius() for v in b]
        series = _binomial_shift(b4_, b1, N)  # y^8 with x^4 = t + b1
        derived = None
        if "alpha" in p:
            x4 = t_plus(b1, N)
            derived = series
            for k, name in enumerate(("alpha", "beta", "gamma", "delta")):
                e8 = p[name]
                for _ in range(3):
                    e8 = e8.frobenius()
                derived = derived + (x4 ** (2 * k)) * e8  # (e x^k)^8 = e^8 (x^4)^(2k)
        return Expansion(spec, series, derived, lambda: series + _horner(b4_, t_plus(b1, N)))
    raise Unsupported(f"branch {br!r} is not catalogued")


# -- branch rules ------------------------------------------------------------------


@dataclass(frozen=True)
class BranchRule:
    branch: str
    coefficients: tuple  # names of the coefficients the rule reads
    conclusion: str


RULES = {
    "C2-i": BranchRule("C2-i", ("z[-2]",), "delta 1 if z[-2] is not a square, else 0"),
    "C2-ii-sq": BranchRule("C2-ii-sq", ("z[0]", "z[1]", "z[2]"), "rational smooth point, delta 0"),
    "C2-ii-nonsq": BranchRule("C2-ii-nonsq", ("X[2]",), "ramified over the pullback, delta 1"),
    "C2-iii-jsq": BranchRule("C2-iii-jsq", ("z[0]", "z[2]"), "z[0] = a0 not a square, delta 1"),
    "C2-iii-jnonsq-out": BranchRule("C2-iii-jnonsq-out", ("X[0]",), "residue field K(j1^(1/2), a0^(1/2)), delta 1"),
    "C2-iii-jnonsq-in": BranchRule("C2-iii-jnonsq-in", ("w4[0]", "w4[2]"), "ramified, delta 1"),
    "D1-b3nz-sq": BranchRule("D1-b3nz-sq", ("y2[0]",), "delta 1 if y2[0] is not a square, else 0"),
    "D1-b3nz-nonsq": BranchRule("D1-b3nz-nonsq", ("z4[0]", "z4[2]"), "inertial or ramified, delta 1"),
    "D1-b3z-i": BranchRule("D1-b3z-i", ("z8[0..4]",), "inertial or ramified, delta 2"),
    "D1-b3z-ii": BranchRule("D1-b3z-ii", ("z4[0]", "z4[2]"), "delta 2 if z4[2] != 0, else 0"),
    "D1-b3z-iii": BranchRule("D1-b3z-iii", ("y2[0]", "y2[2]"), "2 if y2[0] not a square, 1 if y2[2] not a square, else 0"),
}


def _require(cond: bool, spec: PrimeSpec, what: str) -> None:
    if not cond:
        raise AssertionError(f"branch {spec.branch}: expansion violates {what}")


def singularity_degree(nf, spec: PrimeSpec, N: int = DEFAULT_N) -> tuple[int, str]:
    """(delta, residue field description) for one candidate prime."""
    if spec.branch not in RULES:
        raise Unsupported(f"branch {spec.branch!r} is not catalogued")
    ex = expand_local_series(nf, spec, N)
    s, br = ex.series, spec.branch
    if br == "C2-i":
        _require(s.valuation == -2, spec, "ord z = -2")
        return (0 if is_square(s.coeff(-2)) else 1), "K"
    if br == "C2-ii-sq":
        _require(s.valuation == 2, spec, "z = c^-1 t^2 + ...")
        return 0, "K"
    if br == "C2-ii-nonsq":
        _require(s.valuation == 2, spec, "x^4 of order 2")
        return 1, "K(b0^(1/2))"
    if br == "C2-iii-jsq":
        _require(not is_square(s.coeff(0)) and bool(s.coeff(2)), spec, "x^2 = a0 + (nonzero) t^2 + ...")
        return 1, "K(a0^(1/2))"
    if br == "C2-iii-jnonsq-out":
        return 1, "K(j1^(1/2), a0^(1/2))"
    if br == "C2-iii-jnonsq-in":
        w = ex.derived
        _require(w.order() == 2, spec, "w^4 of order 2")
        return 1, "K(j1^(1/2))"
    if br == "D1-b3nz-sq":
        _require(not s.coeff(1), spec, "no t^1 term in y^2")
        return (0 if is_square(s.coeff(0)) else 1), "K"
    if br == "D1-b3nz-nonsq":
        if ex.derived is None:
            return 1, "K(c^(1/2), ybar)"  # inertial
        _require(ex.derived.order() == 2, spec, "z^4 of order 2")
        return 1, "K(c^(1/2))"
    if br == "D1-b3z-i":
        if ex.derived is None:
            return 2, "K(b1^(1/4), ybar)"  # inertial
        _require(ex.derived.order() == 4, spec, "z^8 of order 4")
        return 2, "K(b1^(1/4))"
    if br == "D1-b3z-ii":
        if ex.derived is None:
            return 2, "K(c^(1/2), ybar)"
        z4 = ex.derived
        _require(not z4.coeff(0) and not z4.coeff(1), spec, "z^4 vanishing at the prime")
        return (2 if z4.coeff(2) else 0), "K(c^(1/2))"
    # D1-b3z-iii
    _require(not s.coeff(1), spec, "no t^1 term in y^2")
    if not is_square(s.coeff(0)):
        return 2, "K"
    return (1 if not is_square(s.coeff(2)) else 0), "K"


# -- enumeration of candidate primes ---------------------------------------------------


def _separable_specs(nf: SeparableNormalForm) -> list[PrimeSpec]:
    from .classifier_separable import discriminant_delta

    if not discriminant_delta(nf).delta:
        raise NotGeometricallyElliptic("Delta = 0")
    F = nf.field
    if not nf.a2:
        m = apply_transformation(nf.model(), affine_substitution(F, beta=nf.a0))
        b = m.b
        params = {"b0": b[0], "b4": b[4], "b6": b[6]}
        return [PrimeSpec("C2-i", 1, "pole of x", "t = x^2/y", params)]
    r = is_square_with_witness(nf.a0 / nf.a2)
    if r is not None:
        m = apply_transformation(nf.model(), affine_substitution(F, delta=r, beta=nf.a2))
        f = reduce_to_separable_normal_form(m).form
        params = {"b0": f.b0, "b4": f.b4, "b6": f.b6}
        c = is_square_with_witness(f.b0)
        if c is not None:
            params["c"] = c
            return [PrimeSpec("C2-ii-sq", 1, "zero of x", "t = y + c", params)]
        return [PrimeSpec("C2-ii-nonsq", 2, "zero of x", "t = y^2 + b0", params)]
    m = apply_transformation(nf.model(), affine_substitution(F, beta=nf.a2))
    f = reduce_to_separable_normal_form(m).form
    a0, b0, b4, b6 = f.a0, f.b0, f.b4, f.b6
    y0 = b6 * a0 * a0 * a0 + b4 * a0 * a0 + b0
    params = {"a0": a0, "b0": b0, "b4": b4, "b6": b6, "Y0": y0}
    yb = is_square_with_witness(y0)
    if yb is not None:
        params["ybar"] = yb
        return [PrimeSpec("C2-iii-jsq", 1, "x^2 = a0", "t = y + ybar", params)]
    span = in_square_span(a0, y0)
    if span is None:
        return [PrimeSpec("C2-iii-jnonsq-out", 2, "x^2 = a0", "t = y^2 + ybar^2", params)]
    params["alpha"], params["beta"] = span
    return [PrimeSpec("C2-iii-jnonsq-in", 2, "x^2 = a0", "t = y^2 + ybar^2", params)]


def _fourth_span(u: RatFunc, b1: RatFunc):
    """alpha..delta with u = alpha^4 + beta^4 b1 + gamma^4 b1^2 + delta^4 b1^3."""
    s1 = in_square_span(u, b1)
    if s1 is None:
        return None
    P, Q = s1
    s2, s3 = in_square_span(P, b1), in_square_span(Q, b1)
    if s2 is None or s3 is None:
        return None
    (al, ga), (be, de) = s2, s3
    return al, be, ga, de


def _inseparable_specs(nf: InseparableNormalForm) -> tuple[list[PrimeSpec], int]:
    F = nf.field
    if nf.b3:
        emb, roots = split_quadratic(nf.b3, nf.b1)
        b = [c.lift(emb) for c in nf.b]
        specs = []
        for c in roots:
            r = is_square_with_witness(c)
            if r is not None:
                specs.append(PrimeSpec("D1-b3nz-sq", 1, f"x^2 = {c}", "t = x + c^(1/2)", {"b": b, "c": c, "r": r}))
                continue
            params = {"b": b, "c": c}
            y4_0 = _binomial_shift([v.frobenius() for v in b], c, 1).coeff(0)
            ybar2 = is_square_with_witness(y4_0)
            span = in_square_span(ybar2, c)
            if span is not None:
                params["alpha"], params["beta"] = span
            specs.append(PrimeSpec("D1-b3nz-nonsq", 2, f"x^2 = {c}", "t = x^2 + c", params))
        return specs, emb.big.k // F.k
    b = list(nf.b)
    b1 = nf.b1
    c = is_square_with_witness(b1)
    if c is None:
        params = {"b": b, "b1": b1}
        y8_0 = _binomial_shift([v.frobenius().frobenius() for v in b], b1, 1).coeff(0)
        span = _fourth_span(is_square_with_witness(y8_0), b1)
        if span is not None:
            params.update(zip(("alpha", "beta", "gamma", "delta"), span))
        return [PrimeSpec("D1-b3z-i", 3, "x^4 = b1", "t = x^4 + b1", params)], 1
    c4 = is_fourth_power_with_witness(b1)
    if c4 is None:
        params = {"b": b, "c": c}
        y4_0 = _binomial_shift([v.frobenius() for v in b], c, 1).coeff(0)
        span = in_square_span(is_square_with_witness(y4_0), c)
        if span is not None:
            params["alpha"], params["beta"] = span
        return [PrimeSpec("D1-b3z-ii", 2, "x^2 = c", "t = x^2 + c", params)], 1
    return [PrimeSpec("D1-b3z-iii", 1, "x = c", "t = x + c", {"b": b, "r": c4})], 1


def prime_specs(nf) -> list[PrimeSpec]:
    if isinstance(nf, SeparableNormalForm):
        return _separable_specs(nf)
    if isinstance(nf, InseparableNormalForm):
        return _inseparable_specs(nf)[0]
    raise Unsupported("genus oracle needs a separable or inseparable normal form")


def genus_via_rosenlicht(nf, N: int = DEFAULT_N) -> GenusReport:
    """g = g_bar + sum of singularity degrees over the candidate primes."""
    if isinstance(nf, SeparableNormalForm):
        specs, ext, gbar, g1 = _separable_specs(nf), 1, 1, 1
    elif isinstance(nf, InseparableNormalForm):
        (specs, ext), gbar, g1 = _inseparable_specs(nf), 0, 0
    else:
        raise Unsupported("genus oracle needs a separable or inseparable normal form")
    primes = []
    for spec in specs:
        d, residue = singularity_degree(nf, spec, N)
        primes.append(PrimeDegree(spec.center, d, residue, spec.branch))
    g = gbar + sum(p.delta for p in primes)
    return GenusReport(g, gbar, g1, tuple(primes), case=specs[0].branch, extension_degree=ext)


# -- random instances per branch -------------------------------------------------------


def _nonsquare(F, rng, max_degree):
    while True:
        v = random_ratfunc(F, rng, max_degree, p_zero=0.0)
        if not is_square(v):
            return v


def _nonzero(F, rng, max_degree):
    return random_ratfunc(F, rng, max_degree, p_zero=0.0)


def random_branch_instance(branch: str, F, rng, max_degree: int = 2):
    """(normal form, PrimeSpec) with random coefficients landing in ``branch``."""
    if branch not in RULES:
        raise Unsupported(f"branch {branch!r} is not catalogued")
    r = lambda: random_ratfunc(F, rng, max_degree)  # noqa: E731
    nz = lambda: _nonzero(F, rng, max_degree)  # noqa: E731
    ns = lambda: _nonsquare(F, rng, max_degree)  # noqa: E731
    for _ in range(1000):
        if branch == "C2-i":
            nf = SeparableNormalForm.of(F, 1, 0, r(), r(), nz())
        elif branch == "C2-ii-sq":
            nf = SeparableNormalForm.of(F, 0, 1, nz().frobenius(), r(), nz())
        elif branch == "C2-ii-nonsq":
            nf = SeparableNormalForm.of(F, 0, 1, ns(), r(), nz())
        elif branch.startswith("C2-iii"):
            a0, b4, b6 = ns(), r(), nz()
            if branch == "C2-iii-jsq":
                b0 = r().frobenius() + b6 * a0 * a0 * a0 + b4 * a0 * a0
            else:
                b0 = r()
            nf = SeparableNormalForm.of(F, a0, 1, b0, b4, b6)
            if branch == "C2-iii-jnonsq-out":
                # not produced by prime_specs over GF(2^k)(s); the relation is still valid
                if not _elliptic(nf):
                    continue
                y0 = b6 * a0 * a0 * a0 + b4 * a0 * a0 + b0
                if is_square(y0):
                    continue
                params = {"a0": a0, "b0": b0, "b4": b4, "b6": b6, "Y0": y0}
                return nf, PrimeSpec(branch, 2, "x^2 = a0", "t = y^2 + ybar^2", params)
        else:
            b0, b2, b4, b6 = r(), r(), r(), r()
            if branch in ("D1-b3nz-sq", "D1-b3nz-nonsq"):
                pick = (lambda: nz().frobenius()) if branch == "D1-b3nz-sq" else ns
                c, d = pick(), pick()
                if c == d:
                    continue
                nf = InseparableNormalForm.of(F, b0, c * d, b2, c + d, b4, b6)
            elif branch == "D1-b3z-i":
                nf = InseparableNormalForm.of(F, b0, ns(), b2, 0, b4, b6)
            elif branch == "D1-b3z-ii":
                nf = InseparableNormalForm.of(F, b0, ns().frobenius(), b2, 0, b4, b6)
            else:
                nf = InseparableNormalForm.of(F, b0, r().frobenius().frobenius(), b2, 0, b4, b6)
        if isinstance(nf, SeparableNormalForm) and not _elliptic(nf):
            continue
        for spec in prime_specs(nf):
            if spec.branch == branch:
                return nf, spec
    raise AssertionError(f"could not draw an instance of {branch}")


def _elliptic(nf: SeparableNormalForm) -> bool:
    from .classifier_separable import is_geometrically_elliptic

    return is_geometrically_elliptic(nf)
