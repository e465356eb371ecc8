"""Genus and normal-form cases of geometrically elliptic fields of separable type.

For a separable normal form y^2 + (a2 x^2 + a0) y + b6 x^6 + b4 x^4 + b0 = 0
the discriminant is

    Delta = b6^2 * Delta2,
    Delta2 = a2^6 b0 + a0^2 a2^4 b4 + a0^3 a2^3 b6 + a0^4 b6^2,

the field is geometrically elliptic exactly when Delta != 0, and then
j1 = a2^12 / Delta is the modular invariant of the Frobenius pullback.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve_model import (
    ModelTransformation,
    SeparableNormalForm,
    affine_substitution,
    apply_transformation,
    compose,
    reduce_to_separable_normal_form,
)
from .field_arith import RatFunc, is_square, is_square_with_witness
from .genus import GenusReport, NotGeometricallyElliptic, PrimeDegree

__all__ = [
    "C2Case",
    "GenusReport",
    "NotGeometricallyElliptic",
    "SeparableInvariants",
    "affine_substitution",
    "c1_exception",
    "cor_c2_case",
    "discriminant_delta",
    "genus_separable",
    "is_geometrically_elliptic",
]


@dataclass(frozen=True)
class SeparableInvariants:
    delta: RatFunc
    delta2: RatFunc
    j1: RatFunc | None  # None when Delta = 0
    jbar: RatFunc | None  # j1^(1/2) when it lies in K

    @property
    def j1_is_square(self) -> bool:
        return self.jbar is not None

    def jbar_text(self) -> str:
        if self.j1 is None:
            return "-"
        return str(self.jbar) if self.jbar is not None else f"sqrt({self.j1})"

    def to_json(self) -> dict:
        return {
            "delta": str(self.delta),
            "delta2": str(self.delta2),
            "j1": None if self.j1 is None else str(self.j1),
            "jbar": None if self.j1 is None else self.jbar_text(),
        }


def _delta2(a0, a2, b0, b4, b6):
    a0_2 = a0.frobenius()
    a2_2 = a2.frobenius()
    a2_4 = a2_2.frobenius()
    return (
        a2_4 * a2_2 * b0
        + a0_2 * a2_4 * b4
        + a0_2 * a0 * a2_2 * a2 * b6
        + a0_2.frobenius() * b6.frobenius()
    )


def discriminant_delta(nf: SeparableNormalForm) -> SeparableInvariants:
    d2 = _delta2(nf.a0, nf.a2, nf.b0, nf.b4, nf.b6)
    d = nf.b6.frobenius() * d2
    if not d:
        return SeparableInvariants(d, d2, None, None)
    j1 = nf.a2**12 / d
    return SeparableInvariants(d, d2, j1, is_square_with_witness(j1))


def is_geometrically_elliptic(nf: SeparableNormalForm) -> bool:
    return bool(discriminant_delta(nf).delta)


def c1_exception(nf: SeparableNormalForm) -> bool:
    """Whether the genus drops to 1 (the field is then not of genus 2).

    For a2 != 0: j1 is a nonzero square and a0 a2 is a square; j1 being a
    square is tested as Delta being a square since a2^12 is one.
    For a2 = 0 (j1 = 0): b6 is a square.  The class of b6 modulo squares is
    the invariant here; a0 b6 would change class under y -> beta y.
    """
    inv = discriminant_delta(nf)
    if not inv.delta:
        raise NotGeometricallyElliptic("Delta = 0")
    if nf.a2:
        return is_square(inv.delta) and is_square(nf.a0 * nf.a2)
    return is_square(nf.b6)


def genus_separable(nf: SeparableNormalForm) -> GenusReport:
    exceptional = c1_exception(nf)
    delta = 0 if exceptional else 1
    if nf.a2:
        center = "x^2 = a0/a2"
        residue = "K" if is_square(nf.a0 / nf.a2) else "K(sqrt(a0/a2))"
        case = "ii" if residue == "K" else "iii"
    else:
        center, residue, case = "x = infinity", "K", "i"
    return GenusReport(
        g=1 + delta,
        g_bar=1,
        g1=1,
        prime_degrees=(PrimeDegree(center, delta, residue, "C1"),),
        case=case,
    )


@dataclass(frozen=True)
class C2Case:
    tag: str  # "i", "ii" or "iii"
    form: SeparableNormalForm
    transformation: ModelTransformation
    valid: bool  # the field has genus 2

    def to_json(self) -> dict:
        return {"case": self.tag, "valid": self.valid, "form": [str(c) for c in self.form.as_tuple()]}


def _finish(tag, nf, t, valid_fn) -> C2Case:
    m = apply_transformation(nf.model(), t)
    out = reduce_to_separable_normal_form(m)
    assert out.ok, "case normalisation left the separable normal form"
    form = out.form
    return C2Case(tag, form, compose(t, out.transformation), valid_fn(form))


def cor_c2_case(nf: SeparableNormalForm) -> C2Case:
    """Put a geometrically elliptic separable normal form into case i, ii or iii."""
    if not is_geometrically_elliptic(nf):
        raise NotGeometricallyElliptic("Delta = 0")
    F = nf.field
    if not nf.a2:
        t = affine_substitution(F, beta=nf.a0)
        return _finish("i", nf, t, lambda f: not is_square(f.b6))
    r = is_square_with_witness(nf.a0 / nf.a2)
    if r is not None:
        t = affine_substitution(F, delta=r, beta=nf.a2)
        return _finish("ii", nf, t, lambda f: not is_square(f.b0) and bool(f.b6))
    t = affine_substitution(F, beta=nf.a2)
    return _finish(
        "iii", nf, t, lambda f: not is_square(f.a0) and bool(discriminant_delta(f).delta)
    )
