"""Closed fibers of the genus-2 families over GF(2^k) on the cone S in P^4.

S is swept by the lines through Q = (0:0:0:0:1) and the points
(1:u:u^2:u^3) of the twisted cubic.  The Z-family fiber over
(a0, a2, b0, b4, b6) is

    v^2 + (a0 u0 + a2 u2) v + b0 u0^2 + b4 u2^2 + b6 u3^2 = 0,

seen in the chart W (u0 = 1) as v^2 + (a0 + a2 u^2) v + b0 + b4 u^4 + b6 u^6
and in the chart at infinity (u3 = 1, uh = 1/u, vh = v/u^3) as
vh^2 + (a0 uh^3 + a2 uh) vh + b0 uh^6 + b4 uh^2 + b6.

The X, Y families are the slices a2 = 1, b4 = 0 and a0 = 1, a2 = b0 = 0;
the V family is v^2 = b(u) with b5 = 1 (inseparable type).

Three oracles back the classifier: the Jacobian criterion in both charts,
iterated blowups for (delta, branches, multiplicity), and j computed from a
Weierstrass model of the Frobenius pullback.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import blowup
from .blowup import LocalInvariants
from .curve_model import (
    Obstructed,
    SeparableNormalForm,
    affine_substitution,
    apply_transformation,
    reduce_to_separable_normal_form,
)
from .field_arith import GF2k, RatFunc, reduce_artin_schreier, upoly
from .field_arith.extension import extension, split_roots

FAMILIES = {"Z": 5, "X": 3, "Y": 2, "V": 6}
FAMILY_FIELDS = {
    "Z": ("a0", "a2", "b0", "b4", "b6"),
    "X": ("a0", "b0", "b6"),
    "Y": ("b4", "b6"),
    "V": ("b0", "b1", "b2", "b3", "b4", "b6"),
}
VERTEX_ERROR = "the vertex Q never lies on a fiber"


@dataclass(frozen=True)
class FiberParams:
    family: str
    field: GF2k
    coeffs: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.coeffs) != FAMILIES[self.family]:
            raise ValueError(f"family {self.family} takes {FAMILIES[self.family]} coefficients")
        for c in self.coeffs:
            if not 0 <= c < self.field.order:
                raise ValueError(f"{c} is not an element of {self.field!r}")

    @classmethod
    def Z(cls, F: GF2k, *coeffs) -> "FiberParams":
        return cls("Z", F, tuple(coeffs))

    def named(self) -> dict:
        return dict(zip(FAMILY_FIELDS[self.family], self.coeffs))

    def to_z(self) -> "FiberParams":
        """X and Y fibers as Z fibers; Z passes through; V has no Z form."""
        p = self.named()
        if self.family == "X":
            return FiberParams("Z", self.field, (p["a0"], 1, p["b0"], 0, p["b6"]))
        if self.family == "Y":
            return FiberParams("Z", self.field, (1, 0, 0, p["b4"], p["b6"]))
        if self.family == "Z":
            return self
        raise ValueError("V fibers are of inseparable type and have no Z form")

    def chart(self) -> tuple[tuple, tuple]:
        """(a, b) as coefficient lists in u with the fiber v^2 + a(u) v + b(u) = 0."""
        if self.family == "V":
            b0, b1, b2, b3, b4, b6 = self.coeffs
            return (0, 0, 0, 0), (b0, b1, b2, b3, b4, 1, b6)
        a0, a2, b0, b4, b6 = self.to_z().coeffs
        return (a0, 0, a2, 0), (b0, 0, 0, 0, b4, 0, b6)

    def text(self) -> str:
        F = self.field
        return "(" + ",".join(F.format(c) for c in self.coeffs) + ")"


def iter_params(family: str, F: GF2k):
    """Every parameter point of a family over F, in lexicographic order."""
    for coeffs in itertools.product(F.elements(), repeat=FAMILIES[family]):
        yield FiberParams(family, F, coeffs)


# -- the cone ----------------------------------------------------------------------


@dataclass(frozen=True)
class ConePoint:
    """(u0:u1:u2:u3:v), scaled so that the first nonzero coordinate is 1."""

    coords: tuple
    field: GF2k

    @classmethod
    def of(cls, F: GF2k, *coords) -> "ConePoint":
        if len(coords) != 5 or not any(coords):
            raise ValueError("a point of P^4 needs five coordinates, not all zero")
        lead = next(c for c in coords if c)
        inv = F.inv(lead)
        return cls(tuple(F.mul(c, inv) for c in coords), F)

    @classmethod
    def from_chart(cls, F: GF2k, u: int, v: int) -> "ConePoint":
        return cls.of(F, 1, u, F.mul(u, u), F.pow(u, 3), v)

    @classmethod
    def at_infinity(cls, F: GF2k, vh: int) -> "ConePoint":
        return cls.of(F, 0, 0, 0, 1, vh)

    def on_cone(self) -> bool:
        u0, u1, u2, u3, _ = self.coords
        m = self.field.mul
        return m(u0, u2) == m(u1, u1) and m(u1, u3) == m(u2, u2) and m(u0, u3) == m(u1, u2)

    def is_vertex(self) -> bool:
        return not any(self.coords[:4])

    def chart(self) -> tuple[str, int, int]:
        """('W', u, v) or ('Wh', 0, vh)."""
        if self.is_vertex():
            raise ValueError(VERTEX_ERROR)
        u0, u1, u2, u3, v = self.coords
        if u0:
            return "W", u1, v
        return "Wh", 0, self.field.div(v, u3)

    def lifted(self, E: GF2k) -> "ConePoint":
        if E is self.field:
            return self
        emb = extension(self.field, E.k // self.field.k)
        return ConePoint(tuple(emb.map(c) for c in self.coords), E)

    def __str__(self) -> str:
        return "(" + ":".join(self.field.format(c) for c in self.coords) + ")"

    def sort_key(self):
        return (self.field.k, self.coords)


def _common_field(params: FiberParams, point: ConePoint):
    """Field containing both, with params' chart lifted there."""
    F, E = params.field, point.field
    a, b = params.chart()
    if E is F:
        return E, a, b, point
    if E.k % F.k == 0:
        emb = extension(F, E.k // F.k)
        return E, tuple(emb.map(c) for c in a), tuple(emb.map(c) for c in b), point
    raise ValueError("point and parameters live in incompatible fields")


def fiber_value(params: FiberParams, point: ConePoint) -> int:
    """The fiber's quadratic form at the point (zero iff the point is on the fiber)."""
    E, a, b, point = _common_field(params, point)
    u, v = point.coords[:4], point.coords[4]
    m = E.mul
    r = m(v, v)
    for i, c in enumerate(a):
        r ^= m(m(c, u[i]), v)
    for i, c in enumerate(b):
        p = min(i, 3)
        r ^= m(c, m(u[p], u[i - p]))
    return r


# -- chart polynomials --------------------------------------------------------------


def chart_polynomial(params: FiberParams, chart: str = "W", E: GF2k | None = None) -> dict:
    """The fiber in a chart as a bivariate dict in (u, v) or (uh, vh)."""
    a, b = params.chart()
    if E is not None and E is not params.field:
        emb = extension(params.field, E.k // params.field.k)
        a, b = tuple(emb.map(c) for c in a), tuple(emb.map(c) for c in b)
    if chart == "W":
        f = {(0, 2): 1}
        for i, c in enumerate(a):
            f[(i, 1)] = c
        for i, c in enumerate(b):
            f[(i, 0)] = c
    elif chart == "Wh":
        f = {(0, 2): 1}
        for i, c in enumerate(a):
            f[(3 - i, 1)] = c
        for i, c in enumerate(b):
            f[(6 - i, 0)] = c
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return blowup.strip(f)


def _bi_eval(E, f, x, y):
    r = 0
    for (i, j), c in f.items():
        r ^= E.mul(c, E.mul(E.pow(x, i), E.pow(y, j)))
    return r


def _bi_partial(f, var):
    out = {}
    for (i, j), c in f.items():
        e = (i, j)[var]
        if e & 1:
            out[(i - 1, j) if var == 0 else (i, j - 1)] = c
    return out


# -- discriminant and j ------------------------------------------------------------------


def delta2(F: GF2k, a0, a2, b0, b4, b6) -> int:
    p, m = F.pow, F.mul
    return (
        m(p(a2, 6), b0)
        ^ m(m(p(a0, 2), p(a2, 4)), b4)
        ^ m(m(p(a0, 3), p(a2, 3)), b6)
        ^ m(p(a0, 4), p(b6, 2))
    )


def delta(F: GF2k, a0, a2, b0, b4, b6) -> int:
    return F.mul(F.pow(b6, 2), delta2(F, a0, a2, b0, b4, b6))


def fiber_j(params: FiberParams) -> int:
    """a2^6 / Delta^(1/2) for a fiber with Delta != 0."""
    F = params.field
    a0, a2, b0, b4, b6 = params.to_z().coeffs
    d = delta(F, a0, a2, b0, b4, b6)
    if not d:
        raise ValueError("Delta = 0: the fiber is not an elliptic curve with a cusp")
    return F.div(F.pow(a2, 6), F.sqrt(d))


def _mod2(F: GF2k, *terms) -> int:
    """Sum of integer multiples n*x in characteristic 2 (odd n survive)."""
    r = 0
    for n, x in terms:
        if n % 2:
            r ^= x
    return r


def weierstrass_invariants(F: GF2k, a1, a2, a3, a4, a6) -> dict:
    """b2, b4, b6, b8, c4, Delta of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    The integral formulas are the usual ones; each integer coefficient is
    reduced mod 2 by :func:`_mod2`, so this works in characteristic 2.
    """
    m, p = F.mul, F.pow
    b2 = _mod2(F, (1, p(a1, 2)), (4, a2))
    b4 = _mod2(F, (2, a4), (1, m(a1, a3)))
    b6 = _mod2(F, (1, p(a3, 2)), (4, a6))
    b8 = _mod2(
        F,
        (1, m(p(a1, 2), a6)),
        (4, m(a2, a6)),
        (-1, m(m(a1, a3), a4)),
        (1, m(a2, p(a3, 2))),
        (-1, p(a4, 2)),
    )
    c4 = _mod2(F, (1, p(b2, 2)), (-24, b4))
    disc = _mod2(
        F,
        (-1, m(p(b2, 2), b8)),
        (-8, p(b4, 3)),
        (-27, p(b6, 2)),
        (9, m(m(b2, b4), b6)),
    )
    return {"b2": b2, "b4": b4, "b6": b6, "b8": b8, "c4": c4, "disc": disc}


def weierstrass_j(params: FiberParams) -> int:
    """Fiber j from the Weierstrass model of the Frobenius pullback (oracle).

    The pullback y^2 + (a0 + a2 z) y = b6 z^3 + b4 z^2 + b0 becomes, after
    z = Z/b6 and y = Y/b6, the integral model
    Y^2 + (a2 Z + a0 b6) Y = Z^3 + b4 Z^2 + b0 b6^2.  Its j is j1; the fiber
    invariant is the square root.
    """
    F = params.field
    a0, a2, b0, b4, b6 = params.to_z().coeffs
    if not b6:
        raise ValueError("Delta = 0: b6 vanishes")
    inv = weierstrass_invariants(F, a2, b4, F.mul(a0, b6), 0, F.mul(b0, F.pow(b6, 2)))
    if not inv["disc"]:
        raise ValueError("Delta = 0: singular Weierstrass model")
    j1 = F.div(F.pow(inv["c4"], 3), inv["disc"])
    return F.sqrt(j1)


# -- the singular point formula -----------------------------------------------------------


def singular_point(params: FiberParams) -> ConePoint:
    """The singular point with double tangent line of a Z fiber with (a0, a2) != (0, 0).

    (a2^(3/2) : a0^(1/2) a2 : a0 a2^(1/2) : a0^(3/2) : (b0 a2^3 + b4 a0^2 a2 + b6 a0^3)^(1/2))
    """
    F = params.field
    a0, a2, b0, b4, b6 = params.to_z().coeffs
    if not a0 and not a2:
        raise ValueError("(a0, a2) = (0, 0): the fiber is non-reduced and has no isolated singular point")
    m, p, sq = F.mul, F.pow, F.sqrt
    r0, r2 = sq(a0), sq(a2)
    w = sq(m(b0, p(a2, 3)) ^ m(m(b4, p(a0, 2)), a2) ^ m(b6, p(a0, 3)))
    return ConePoint.of(F, m(a2, r2), m(r0, a2), m(a0, r2), m(a0, r0), w)


NODE_POINT = (0, 0, 0, 1, 0)


# -- classification -----------------------------------------------------------------------

LOCAL_TYPES = {
    "cusp": (1, 1, 2),
    "node": (1, 2, 2),
    "tacnode": (2, 2, 2),
    "ramphoid cusp": (2, 1, 2),
    "triple contact": (3, 2, 2),
}


@dataclass(frozen=True)
class SingularPointRecord:
    point: ConePoint
    local_type: str
    delta: int
    branches: int
    multiplicity: int  # multiplicity of the point on the fiber
    intersection: int | None = None  # of the two branches, when there are two

    @classmethod
    def of(cls, point: ConePoint, local_type: str) -> "SingularPointRecord":
        d, b, m = LOCAL_TYPES[local_type]
        return cls(point, local_type, d, b, m, d if b == 2 else None)

    def invariants(self) -> tuple:
        return (self.delta, self.branches, self.multiplicity)

    def text(self) -> str:
        extra = f",I={self.intersection}" if self.intersection is not None else ""
        return f"{self.point}[{self.local_type}:d={self.delta},r={self.branches},m={self.multiplicity}{extra}]"


FIBER_CLASSES = (
    "EllipticCusp",
    "RationalTacnode",
    "RationalCuspNode",
    "RamphoidCusp",
    "NonIntegralPair21",
    "NonIntegralPairMult3",
    "NonReducedDouble",
    "TwoCusps",
)


@dataclass(frozen=True)
class FiberClass:
    tag: str
    params: FiberParams
    integral: bool
    records: tuple = ()
    j: int | None = None
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def g_bar(self) -> int:
        """Geometric genus of an integral fiber."""
        return 1 if self.tag == "EllipticCusp" else 0

    def delta_sum(self) -> int:
        return sum(r.delta for r in self.records)

    def singular_set(self) -> list:
        return sorted((r.point for r in self.records), key=ConePoint.sort_key)

    def to_json(self) -> dict:
        F = self.params.field
        return {
            "family": self.params.family,
            "k": F.k,
            "params": [F.format(c) for c in self.params.coeffs],
            "class": self.tag,
            "integral": self.integral,
            "j": None if self.j is None else F.format(self.j),
            "points": [
                {
                    "point": str(r.point),
                    "type": r.local_type,
                    "delta": r.delta,
                    "branches": r.branches,
                    "multiplicity": r.multiplicity,
                    "intersection": r.intersection,
                }
                for r in self.records
            ],
        }


def classify_fiber(params: FiberParams) -> FiberClass:
    """Decision tree for a Z fiber; X and Y fibers are accepted through their Z form."""
    if params.family == "V":
        return classify_fiber_sub(params)
    z = params.to_z()
    F = z.field
    a0, a2, b0, b4, b6 = z.coeffs
    m = F.mul
    node = ConePoint.of(F, *NODE_POINT)
    if not a0 and not a2:
        return FiberClass("NonReducedDouble", params, False)
    d2 = delta2(F, a0, a2, b0, b4, b6)
    p = singular_point(z)
    if b6 and d2:
        return FiberClass("EllipticCusp", params, True, (SingularPointRecord.of(p, "cusp"),), fiber_j(z))
    if b6:
        return FiberClass("RationalTacnode", params, True, (SingularPointRecord.of(p, "tacnode"),))
    if a2:
        if m(m(a2, a2), b0) != m(m(a0, a0), b4):
            recs = (SingularPointRecord.of(p, "cusp"), SingularPointRecord.of(node, "node"))
            return FiberClass("RationalCuspNode", params, True, recs)
        recs = (SingularPointRecord.of(p, "tacnode"), SingularPointRecord.of(node, "node"))
        return FiberClass("NonIntegralPair21", params, False, recs)
    if b4:
        return FiberClass("RamphoidCusp", params, True, (SingularPointRecord.of(p, "ramphoid cusp"),))
    return FiberClass("NonIntegralPairMult3", params, False, (SingularPointRecord.of(p, "triple contact"),))


def classify_fiber_sub(params: FiberParams) -> FiberClass:
    """X, Y and V fibers.  V points may need GF(2^(2k)) when T^2 + b3 T + b1 is irreducible."""
    if params.family in ("X", "Y", "Z"):
        return classify_fiber(params)
    F = params.field
    b0, b1, b2, b3, b4, b6 = params.coeffs
    b = (b0, b1, b2, b3, b4, 1, b6)
    if b3:
        emb, roots = split_roots(F, (b1, b3, 1))
        E = emb.big
        bl = tuple(emb.map(c) for c in b)
        pts = []
        for c in roots:
            u = E.sqrt(c)
            pts.append(ConePoint.from_chart(E, u, E.sqrt(upoly.evaluate(E, bl, u))))
        recs = tuple(SingularPointRecord.of(q, "cusp") for q in sorted(pts, key=ConePoint.sort_key))
        return FiberClass("TwoCusps", params, True, recs, notes={"extension_degree": E.k // F.k})
    u = F.sqrt(F.sqrt(b1))
    q = ConePoint.from_chart(F, u, F.sqrt(upoly.evaluate(F, b, u)))
    return FiberClass("RamphoidCusp", params, True, (SingularPointRecord.of(q, "ramphoid cusp"),))


# -- oracles ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularLocus:
    points: tuple
    non_reduced: bool = False


def _chart_locus(E: GF2k, a, b, chart: str) -> list:
    """Singular points of v^2 + a(u) v + b(u) in one chart, solved exactly."""
    a, b = upoly.strip(a), upoly.strip(b)
    da, db = upoly.derivative(a), upoly.derivative(b)
    pts = []
    if a:
        us = upoly.roots(E, a)  # F_v = a(u) = 0
        for u in us:
            # a(u) = 0 leaves v^2 = b(u) and F_u = a'(u) v + b'(u) = 0
            v = E.sqrt(upoly.evaluate(E, b, u))
            if E.mul(upoly.evaluate(E, da, u), v) == upoly.evaluate(E, db, u):
                pts.append((u, v))
    else:
        if not db:
            return None
        for u in upoly.roots(E, db):
            pts.append((u, E.sqrt(upoly.evaluate(E, b, u))))
    if chart == "Wh":
        pts = [(u, v) for u, v in pts if u == 0]
    return pts


def jacobian_singular_locus(params: FiberParams, E: GF2k | None = None) -> SingularLocus:
    """Singular points by the Jacobian criterion in both charts (oracle).

    Points are returned over the smallest extension containing them unless
    a field ``E`` is forced.
    """
    F = params.field
    a, b = params.chart()
    if not any(a) and not any(upoly.derivative(upoly.strip(b))):
        return SingularLocus((), True)
    if E is None:
        # the singular u satisfy a(u) = 0 or b'(u) = 0; split whichever applies
        f = upoly.strip(a) or upoly.derivative(upoly.strip(b))
        f = upoly.strip(f)
        E = split_roots(F, f)[0].big if len(f) > 1 else F
        # u is a square root of a root, which stays in the same finite field
    emb = extension(F, E.k // F.k)
    a, b = tuple(emb.map(c) for c in a), tuple(emb.map(c) for c in b)
    pts = [ConePoint.from_chart(E, u, v) for u, v in _chart_locus(E, a, b, "W")]
    ah = tuple(reversed(a))
    bh = tuple(reversed(b))
    pts += [ConePoint.at_infinity(E, v) for _, v in _chart_locus(E, ah, bh, "Wh")]
    return SingularLocus(tuple(sorted(set(pts), key=ConePoint.sort_key)))


def enumerate_singular_points(params: FiberParams, E: GF2k | None = None) -> SingularLocus:
    """Exhaustive search over E-rational points of both charts (oracle for small fields)."""
    F = params.field
    E = E or F
    if E.order > 1 << 8:
        raise ValueError("exhaustive enumeration is limited to fields with at most 256 elements")
    fw, fh = chart_polynomial(params, "W", E), chart_polynomial(params, "Wh", E)
    fwu, fwv = _bi_partial(fw, 0), _bi_partial(fw, 1)
    fhu, fhv = _bi_partial(fh, 0), _bi_partial(fh, 1)
    reduced = bool(upoly.strip(params.chart()[0])) or bool(
        upoly.derivative(upoly.strip(params.chart()[1]))
    )
    if not reduced:
        return SingularLocus((), True)
    pts = []
    for u in E.elements():
        for v in E.elements():
            if not _bi_eval(E, fw, u, v) and not _bi_eval(E, fwu, u, v) and not _bi_eval(E, fwv, u, v):
                pts.append(ConePoint.from_chart(E, u, v))
    for v in E.elements():
        if not _bi_eval(E, fh, 0, v) and not _bi_eval(E, fhu, 0, v) and not _bi_eval(E, fhv, 0, v):
            pts.append(ConePoint.at_infinity(E, v))
    return SingularLocus(tuple(sorted(pts, key=ConePoint.sort_key)))


def local_delta(params: FiberParams, point: ConePoint) -> LocalInvariants:
    """(delta, branches, multiplicity) at a point by iterated blowups (oracle)."""
    if point.is_vertex():
        raise ValueError(VERTEX_ERROR)
    F = params.field
    a, b = params.chart()
    if not any(a) and not any(upoly.derivative(upoly.strip(b))):
        raise ValueError("the fiber is non-reduced: every point is singular")
    E = point.field
    chart, x0, y0 = point.chart()
    f = chart_polynomial(params, chart, E)
    if _bi_eval(E, f, x0, y0):
        raise ValueError(f"{point} does not lie on the fiber")
    return blowup.delta_invariant(E, blowup.translate(E, f, x0, y0))


# -- base extension ----------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifyingMap:
    """Coefficients of a normal form as functions of s, i.e. a map B -> A^n."""

    family: str
    coeffs: tuple  # RatFunc
    names: tuple
    witness: dict = field(default_factory=dict, compare=False)

    def specialize(self, sigma: int) -> FiberParams | None:
        """The fiber over s = sigma, or None where a coefficient has a pole."""
        F = self.coeffs[0].field
        vals = [c.specialize(sigma) for c in self.coeffs]
        if None in vals:
            return None
        return FiberParams(self.family, F, tuple(vals))

    def text(self) -> str:
        body = ", ".join(f"{n}={c}" for n, c in zip(self.names, self.coeffs))
        return f"{self.family}: s -> ({body})"


def base_extension_params(nf) -> ClassifyingMap:
    """Classifying data of a separable field over GF(2^k)(s).

    Returns the Z-family map (a0, a2, b0, b4, b6).  When a2 != 0 and
    b4 = 0 after scaling a2 to 1, or a2 = 0 and b0 = 0 after scaling a0 to 1,
    the X or Y map is returned instead.  ``witness`` records the Artin-Schreier
    class of b4 (a2 = 1) that a quadratic base extension would remove.
    """
    if isinstance(nf, Obstructed):
        raise ValueError(f"obstructed normal form: {nf.reason}")
    if not isinstance(nf, SeparableNormalForm):
        raise TypeError("expected a SeparableNormalForm")
    F = nf.field
    if nf.a2:
        m = apply_transformation(nf.model(), affine_substitution(F, beta=nf.a2))
        f = reduce_to_separable_normal_form(m).form
        red = reduce_artin_schreier(f.b4)
        witness = {"b4_artin_schreier": red.kind}
        if not f.b4:
            return ClassifyingMap("X", (f.a0, f.b0, f.b6), FAMILY_FIELDS["X"], witness)
        return ClassifyingMap("Z", nf.as_tuple(), FAMILY_FIELDS["Z"], witness)
    if nf.a0:
        m = apply_transformation(nf.model(), affine_substitution(F, beta=nf.a0))
        f = reduce_to_separable_normal_form(m).form
        if not f.b0:
            return ClassifyingMap("Y", (f.b4, f.b6), FAMILY_FIELDS["Y"])
    return ClassifyingMap("Z", nf.as_tuple(), FAMILY_FIELDS["Z"])


def specialization_matches(nf: SeparableNormalForm, sigma: int) -> bool | None:
    """Whether the fiber at s = sigma is an EllipticCusp when Delta(sigma) != 0."""
    cm = ClassifyingMap("Z", nf.as_tuple(), FAMILY_FIELDS["Z"])
    p = cm.specialize(sigma)
    if p is None:
        return None
    F = p.field
    if not delta(F, *p.coeffs):
        return None
    return classify_fiber(p).tag == "EllipticCusp"
