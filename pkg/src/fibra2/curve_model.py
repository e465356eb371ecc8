"""Genus-2 models y^2 + a(x) y + b(x) = 0 over K and their transformations.

A :class:`ModelTransformation` ``(A, beta, gamma)`` introduces new
coordinates

    x' = (A11 x + A12) / (A21 x + A22),   y' = (beta y + gamma(x)) / L^3,

with ``L = A21 x + A22``.  In characteristic 2 the new coefficients satisfy

    beta a(x)      = L^3 a'(x')
    beta^2 b(x)    = L^6 b'(x') + gamma^2 + L^3 a'(x') gamma,

which :func:`apply_transformation` solves through the inverse Moebius map.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from . import kpoly
from .field_arith import FieldDescriptor, GF2k, RatFunc, Unsupported, gf
from .field_arith.text import (
    ParseError,
    format_kpoly,
    parse_binary_poly,
    parse_bivariate,
    parse_ratfunc,
)


def to_k(F: GF2k, v) -> RatFunc:
    """Coerce an int (a GF(2^k) element), str, or RatFunc to an element of K."""
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, bool):
        v = int(v)
    if isinstance(v, int):
        if not 0 <= v < F.order:
            raise ValueError(f"{v} is not an element of GF(2^{F.k})")
        return RatFunc.constant(F, v)
    if isinstance(v, str):
        return parse_ratfunc(F, v)
    raise TypeError(f"cannot interpret {v!r} as an element of K")


class SeparabilityKind(Enum):
    SEPARABLE = "SeparableType"
    INSEPARABLE = "InseparableType"


@dataclass(frozen=True)
class HyperellipticModel:
    a: tuple  # (a0, a1, a2, a3)
    b: tuple  # (b0, ..., b6)
    field: GF2k

    def __post_init__(self):
        if len(self.a) != 4 or len(self.b) != 7:
            raise ValueError("a needs 4 coefficients and b needs 7")

    @classmethod
    def of(cls, F: GF2k, a=(), b=()) -> "HyperellipticModel":
        a = [to_k(F, v) for v in a] + [RatFunc.constant(F, 0)] * (4 - len(a))
        b = [to_k(F, v) for v in b] + [RatFunc.constant(F, 0)] * (7 - len(b))
        return cls(tuple(a), tuple(b), F)

    @property
    def descriptor(self) -> FieldDescriptor:
        return FieldDescriptor.of(self.field)

    def b_prime(self) -> tuple:
        """Coefficients (b1, b3, b5) of b'(x) = b5 x^4 + b3 x^2 + b1."""
        return self.b[1], self.b[3], self.b[5]

    def __str__(self) -> str:
        return format_model(self)

    def to_json(self) -> dict:
        return {
            "a": [str(c) for c in self.a],
            "b": [str(c) for c in self.b],
            "field": self.descriptor.to_json(),
        }


def format_model(m: HyperellipticModel) -> str:
    if not any(m.a):
        return f"y^2 + ({format_kpoly(m.b)}) = 0"
    return f"y^2 + ({format_kpoly(m.a)})*y + ({format_kpoly(m.b)}) = 0"


def parse_model(text: str, F: GF2k | None = None) -> HyperellipticModel:
    F = F or gf(1)
    poly = parse_bivariate(F, text)
    if poly.get((0, 2)) != 1:
        raise ParseError("equation must contain y^2 with coefficient 1", text, 0)
    zero = RatFunc.constant(F, 0)
    a, b = [zero] * 4, [zero] * 7
    for (i, j), c in poly.items():
        if j == 2 and i == 0:
            continue
        if j == 1 and i <= 3:
            a[i] = c
        elif j == 0 and i <= 6:
            b[i] = c
        else:
            raise ParseError(f"monomial x^{i}*y^{j} is not allowed in the model", text, 0)
    return HyperellipticModel(tuple(a), tuple(b), F)


def field_from_json(d: dict) -> GF2k:
    k = int(d.get("k", 1))
    mod = d.get("modulus")
    if isinstance(mod, str):
        mod = parse_binary_poly(mod)
    return gf(k, mod)


def model_from_json(d: dict | str) -> HyperellipticModel:
    if isinstance(d, str):
        d = json.loads(d)
    F = field_from_json(d.get("field", {}))
    return HyperellipticModel.of(F, d.get("a", []), d.get("b", []))


# -- transformations -----------------------------------------------------------


@dataclass(frozen=True)
class ModelTransformation:
    mobius: tuple  # (A11, A12, A21, A22)
    beta: RatFunc
    gamma: tuple  # (g0, g1, g2, g3)

    def __post_init__(self):
        if not self.beta:
            raise ValueError("invalid transformation: beta = 0")
        if not self.det():
            raise ValueError("invalid transformation: singular Moebius matrix")

    @property
    def field(self) -> GF2k:
        return self.beta.field

    def det(self) -> RatFunc:
        m = self.mobius
        return m[0] * m[3] + m[1] * m[2]

    @classmethod
    def of(cls, F: GF2k, mobius=(1, 0, 0, 1), beta=1, gamma=()) -> "ModelTransformation":
        gamma = [to_k(F, v) for v in gamma]
        gamma += [RatFunc.constant(F, 0)] * (4 - len(gamma))
        return cls(tuple(to_k(F, v) for v in mobius), to_k(F, beta), tuple(gamma))

    @classmethod
    def identity(cls, F: GF2k) -> "ModelTransformation":
        return cls.of(F)

    def then(self, other: "ModelTransformation") -> "ModelTransformation":
        """The transformation 'self first, then other'."""
        return compose(self, other)

    def inverse(self) -> "ModelTransformation":
        m = self.mobius
        d = self.det().inverse()
        inv = (m[3] * d, m[1] * d, m[2] * d, m[0] * d)
        binv = self.beta.inverse()
        gamma = kpoly.scale(kpoly.homogenize(self.gamma, 3, inv), binv)
        return ModelTransformation(inv, binv, tuple(gamma))

    def rescaled(self, c: RatFunc) -> "ModelTransformation":
        """(cA, c^3 beta, c^3 gamma): the same change of coordinates."""
        c3 = c * c * c
        return ModelTransformation(
            tuple(c * v for v in self.mobius), c3 * self.beta, tuple(c3 * g for g in self.gamma)
        )


def compose(t1: ModelTransformation, t2: ModelTransformation) -> ModelTransformation:
    """Apply t1, then t2: apply(apply(m, t1), t2) == apply(m, compose(t1, t2))."""
    a, b = t2.mobius, t1.mobius
    mob = (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )
    gamma = kpoly.add(kpoly.scale(t1.gamma, t2.beta), kpoly.homogenize(t2.gamma, 3, t1.mobius))
    return ModelTransformation(mob, t1.beta * t2.beta, tuple(kpoly.pad(gamma, 4)))


def affine_substitution(F, alpha=1, delta=0, beta=1, gamma=()) -> ModelTransformation:
    """Replace x by alpha x + delta and y by beta y + gamma(x).

    The resulting model has a(x) -> a(alpha x + delta) / beta.
    """
    return ModelTransformation.of(F, mobius=(alpha, delta, 0, 1), beta=beta, gamma=gamma).inverse()


def apply_transformation(m: HyperellipticModel, t: ModelTransformation) -> HyperellipticModel:
    if t.field is not m.field:
        raise ValueError("transformation and model live over different fields")
    A = t.mobius
    adj = (A[3], A[1], A[2], A[0])
    dinv = t.det().inverse()
    d3 = dinv * dinv * dinv
    beta, gamma = t.beta, list(t.gamma)
    new_a = kpoly.scale(kpoly.homogenize(m.a, 3, adj), beta * d3)
    # beta^2 b + gamma^2 + beta a gamma, a polynomial of formal degree 6 in x
    rhs = kpoly.add(
        kpoly.add(kpoly.scale(m.b, beta.frobenius()), kpoly.square(gamma)),
        kpoly.scale(kpoly.mul(m.a, gamma), beta),
    )
    new_b = kpoly.scale(kpoly.homogenize(rhs, 6, adj), d3.frobenius())
    return HyperellipticModel(tuple(new_a), tuple(new_b), m.field)


# -- type and normal forms -----------------------------------------------------


def separability_kind(m: HyperellipticModel) -> SeparabilityKind:
    if any(m.a):
        return SeparabilityKind.SEPARABLE
    if any(m.b_prime()):
        return SeparabilityKind.INSEPARABLE
    raise ValueError("a = 0 and b' = 0: not a separable function field (y is inseparable)")


@dataclass(frozen=True)
class SeparableNormalForm:
    """a = a2 x^2 + a0, b = b6 x^6 + b4 x^4 + b0."""

    a0: RatFunc
    a2: RatFunc
    b0: RatFunc
    b4: RatFunc
    b6: RatFunc

    @classmethod
    def of(cls, F: GF2k, a0=0, a2=0, b0=0, b4=0, b6=0) -> "SeparableNormalForm":
        return cls(*(to_k(F, v) for v in (a0, a2, b0, b4, b6)))

    @property
    def field(self) -> GF2k:
        return self.a0.field

    def model(self) -> HyperellipticModel:
        z = RatFunc.constant(self.field, 0)
        return HyperellipticModel(
            (self.a0, z, self.a2, z), (self.b0, z, z, z, self.b4, z, self.b6), self.field
        )

    def as_tuple(self) -> tuple:
        """Parameter order (a0, a2, b0, b4, b6)."""
        return (self.a0, self.a2, self.b0, self.b4, self.b6)


@dataclass(frozen=True)
class InseparableNormalForm:
    """a = 0, b = b6 x^6 + x^5 + b4 x^4 + ... + b0."""

    b0: RatFunc
    b1: RatFunc
    b2: RatFunc
    b3: RatFunc
    b4: RatFunc
    b6: RatFunc

    @classmethod
    def of(cls, F: GF2k, b0=0, b1=0, b2=0, b3=0, b4=0, b6=0) -> "InseparableNormalForm":
        return cls(*(to_k(F, v) for v in (b0, b1, b2, b3, b4, b6)))

    @classmethod
    def from_b(cls, F: GF2k, text: str) -> "InseparableNormalForm":
        """From "b(x)" text; the x^5 coefficient must be 1."""
        m = parse_model(f"y^2 = {text}", F)
        if any(m.a) or m.b[5] != 1:
            raise ValueError("expected b(x) with x^5 coefficient 1")
        b = m.b
        return cls(b[0], b[1], b[2], b[3], b[4], b[6])

    @property
    def field(self) -> GF2k:
        return self.b0.field

    @property
    def b(self) -> tuple:
        one = RatFunc.constant(self.field, 1)
        return (self.b0, self.b1, self.b2, self.b3, self.b4, one, self.b6)

    def model(self) -> HyperellipticModel:
        z = RatFunc.constant(self.field, 0)
        return HyperellipticModel((z, z, z, z), self.b, self.field)


@dataclass(frozen=True)
class Obstructed:
    reason: str
    residual: tuple | None = None  # (coefficient name, value)


@dataclass(frozen=True)
class NormalFormOutcome:
    form: SeparableNormalForm | InseparableNormalForm | Obstructed
    transformation: ModelTransformation
    model: HyperellipticModel = field(compare=False)

    @property
    def kind(self) -> str:
        return {
            SeparableNormalForm: "SeparableNormalForm",
            InseparableNormalForm: "InseparableNormalForm",
            Obstructed: "Obstructed",
        }[type(self.form)]

    @property
    def ok(self) -> bool:
        return not isinstance(self.form, Obstructed)


def _mobius_to_double_root_form(m: HyperellipticModel) -> ModelTransformation | Obstructed:
    """Moebius map turning a(x) into a2 x^2 + a0, or the obstruction."""
    F = m.field
    a0, a1, a2, a3 = m.a
    deg = kpoly.degree(m.a)
    ident = ModelTransformation.identity(F)
    if deg <= 0:
        return ident
    if deg == 2:
        if a1:
            return Obstructed("no double tangent structure", ("a1", a1))
        return ident
    if deg == 1:
        rho = a0 / a1
    else:
        # a has a multiple root iff a' = a3 x^2 + a1 divides a; then
        # a = a3 (x^2 + a1/a3)(x + rho) and rho = a2/a3 is the simple root
        r2 = a1 / a3
        rem1 = a0 + a2 * r2
        if rem1:
            return Obstructed("no double tangent structure", ("a", rem1))
        rho = a2 / a3
    one, zero = RatFunc.constant(F, 1), RatFunc.constant(F, 0)
    # x' = 1 / (x + rho) sends the simple root to infinity
    return ModelTransformation((zero, one, one, rho), one, (zero,) * 4)


def reduce_to_separable_normal_form(m: HyperellipticModel) -> NormalFormOutcome:
    if separability_kind(m) is not SeparabilityKind.SEPARABLE:
        raise ValueError("model is of inseparable type")
    F = m.field
    mob = _mobius_to_double_root_form(m)
    if isinstance(mob, Obstructed):
        return NormalFormOutcome(mob, ModelTransformation.identity(F), m)
    m1 = apply_transformation(m, mob)
    a0, _, a2, _ = m1.a
    b0, b1, b2, b3, b4, b5, b6 = m1.b
    zero = RatFunc.constant(F, 0)
    if a2:
        g3 = b5 / a2
        g1 = (b3 + a0 * g3) / a2
        g2 = zero
        g0 = (b2 + g1.frobenius()) / a2
        residual = ("b1", b1 + a0 * g1)
    else:
        g3 = b3 / a0
        g1 = b1 / a0
        g2 = (b2 + g1.frobenius()) / a0
        g0 = zero
        residual = ("b5", b5)
    shift = ModelTransformation.of(F, gamma=(g0, g1, g2, g3))
    t = compose(mob, shift)
    m2 = apply_transformation(m1, shift)
    if residual[1]:
        return NormalFormOutcome(Obstructed("conservative model", residual), t, m2)
    nb = m2.b
    form = SeparableNormalForm(m2.a[0], m2.a[2], nb[0], nb[4], nb[6])
    assert form.model() == m2
    return NormalFormOutcome(form, t, m2)


# x, 1/x and 1/(x+1); the last one gives b5 + b3 + b1 as new x^5 coefficient
_INSEP_MOBIUS = ((1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 1, 1))


def reduce_to_inseparable_normal_form(m: HyperellipticModel) -> NormalFormOutcome:
    if separability_kind(m) is not SeparabilityKind.INSEPARABLE:
        raise ValueError("model is of separable type")
    F = m.field
    for mob in _INSEP_MOBIUS:
        t = ModelTransformation.of(F, mobius=mob)
        m1 = apply_transformation(m, t)
        if m1.b[5]:
            break
    else:  # pragma: no cover - b' != 0 rules this out
        raise AssertionError("no Moebius map produced b5 != 0")
    # x' = x / b5 makes the x^5 coefficient 1
    scale = ModelTransformation.of(F, mobius=(1, 0, 0, m1.b[5]))
    t = compose(t, scale)
    m2 = apply_transformation(m1, scale)
    b = m2.b
    form = InseparableNormalForm(b[0], b[1], b[2], b[3], b[4], b[6])
    assert form.model() == m2
    return NormalFormOutcome(form, t, m2)


def reduce_to_normal_form(m: HyperellipticModel) -> NormalFormOutcome:
    if separability_kind(m) is SeparabilityKind.SEPARABLE:
        return reduce_to_separable_normal_form(m)
    return reduce_to_inseparable_normal_form(m)


def is_absolutely_irreducible(nf) -> bool:
    """Whether y^2 + a y + b stays irreducible over the algebraic closure.

    In the separable normal form a factorisation y = p(x) forces p to be
    even of degree <= 2, which happens exactly when b6 = 0 and either
    a2 != 0 and a2^2 b0 = a0^2 b4, or a2 = 0 and b4 = 0.  In particular
    b6 != 0 with a != 0 is enough.
    """
    if isinstance(nf, InseparableNormalForm):
        return True  # b5 = 1, so b is not a square in the algebraic closure
    if isinstance(nf, SeparableNormalForm):
        if not nf.a0 and not nf.a2:
            return False
        if nf.b6:
            return True
        if nf.a2:
            return nf.a2.frobenius() * nf.b0 != nf.a0.frobenius() * nf.b4
        return bool(nf.b4)
    raise Unsupported("irreducibility is only decided for normal forms")
