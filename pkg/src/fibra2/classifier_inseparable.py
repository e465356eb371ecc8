"""Genus of fields of inseparable type y^2 = b(x) with b5 = 1.

Singular primes sit over the zeros of b'(x) = x^4 + b3 x^2 + b1.  When
b3 != 0 the quadratic T^2 + b3 T + b1 is split (passing to GF(2^(2k))(s)
if needed) and each root c contributes degree 1 unless c and
b0 + b2 c + b4 c^2 + b6 c^3 are both squares.  When b3 = 0 the single
prime over x^4 = b1 is handled by the class of b1 modulo K^2 and K^4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve_model import InseparableNormalForm
from .field_arith import (
    is_fourth_power_with_witness,
    is_square,
    is_square_with_witness,
    split_quadratic,
)
from .genus import GenusReport, PrimeDegree

__all__ = ["InseparableAnalysis", "analyse_inseparable", "genus_inseparable"]


@dataclass(frozen=True)
class InseparableAnalysis:
    case: str  # "b3nz", "b3z-i", "b3z-ii", "b3z-iii"
    roots: tuple  # roots c (and d) of T^2 + b3 T + b1, or the witness c for b3 = 0
    extension_degree: int
    prime_degrees: tuple


def _lift(nf: InseparableNormalForm, emb) -> tuple:
    return tuple(c.lift(emb) for c in (nf.b0, nf.b1, nf.b2, nf.b3, nf.b4, nf.b6))


def analyse_inseparable(nf: InseparableNormalForm) -> InseparableAnalysis:
    b0, b1, b2, b3, b4, b6 = nf.b0, nf.b1, nf.b2, nf.b3, nf.b4, nf.b6
    if b3:
        emb, roots = split_quadratic(b3, b1)
        b0, b1, b2, b3, b4, b6 = _lift(nf, emb)
        primes = []
        for c in roots:
            value = b0 + b2 * c + b4 * c.frobenius() + b6 * c.frobenius() * c
            d = 1 if (not is_square(c) or not is_square(value)) else 0
            residue = "K" if is_square(c) else "K(sqrt(c))"
            primes.append(PrimeDegree(f"x^2 = {c}", d, residue, "D1-b3nz"))
        return InseparableAnalysis("b3nz", tuple(roots), emb.big.k // nf.field.k, tuple(primes))
    c = is_square_with_witness(b1)
    if c is None:
        p = PrimeDegree(f"x^4 = {b1}", 2, "K(b1^(1/4))", "D1-b3z-i")
        return InseparableAnalysis("b3z-i", (), 1, (p,))
    c4 = is_fourth_power_with_witness(b1)
    if c4 is None:
        c2 = c.frobenius()
        ok = is_square(b0 + b4 * c2) and is_square(b2 + b6 * c2)
        p = PrimeDegree(f"x^2 = {c}", 0 if ok else 2, "K(sqrt(c))", "D1-b3z-ii")
        return InseparableAnalysis("b3z-ii", (c,), 1, (p,))
    c = c4
    c2 = c.frobenius()
    c4p = c2.frobenius()
    total = b0 + b2 * c2 + b4 * c4p + b6 * c4p * c2
    if not is_square(total):
        d = 2
    elif not is_square(b2 + b6 * c4p):
        d = 1
    else:
        d = 0
    p = PrimeDegree(f"x = {c}", d, "K", "D1-b3z-iii")
    return InseparableAnalysis("b3z-iii", (c,), 1, (p,))


def genus_inseparable(nf: InseparableNormalForm) -> GenusReport:
    """Genus with g_bar = g1 = 0; raises Unsupported for geometric splitting fields."""
    if not isinstance(nf, InseparableNormalForm):
        raise TypeError("expected an InseparableNormalForm (b5 = 1)")
    an = analyse_inseparable(nf)
    g = sum(p.delta for p in an.prime_degrees)
    return GenusReport(
        g=g,
        g_bar=0,
        g1=0,
        prime_degrees=an.prime_degrees,
        case=an.case,
        extension_degree=an.extension_degree,
    )
