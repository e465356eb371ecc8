"""Delta invariant and branch count of plane curve singularities in characteristic 2.

Bivariate polynomials are dicts ``{(i, j): c}`` meaning sum c x^i y^j with
coefficients in a :class:`GF2k`.  The singularity at the origin is resolved
by quadratic transforms: at a point of multiplicity m the delta invariant
collects m(m-1)/2 and the strict transform is followed into every tangent
direction.  Tangent directions with irrational slope are handled by moving
the whole polynomial to the splitting field of the tangent cone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field_arith import upoly
from .field_arith.extension import split_roots
from .field_arith.gf import GF2k

BiPoly = dict


def _subsets(n: int):
    """All k with C(n, k) odd (Lucas), i.e. the binary submasks of n."""
    k = n
    while True:
        yield k
        if k == 0:
            return
        k = (k - 1) & n


def strip(f: BiPoly) -> BiPoly:
    return {e: c for e, c in f.items() if c}


def translate(E: GF2k, f: BiPoly, x0: int, y0: int) -> BiPoly:
    """f(x + x0, y + y0)."""
    out: dict = {}
    for (i, j), c in f.items():
        for a in _subsets(i):
            ca = E.mul(c, E.pow(x0, i - a))
            if not ca:
                continue
            for b in _subsets(j):
                v = E.mul(ca, E.pow(y0, j - b))
                if v:
                    out[(a, b)] = out.get((a, b), 0) ^ v
    return strip(out)


def lift(f: BiPoly, emb) -> BiPoly:
    return {e: emb.map(c) for e, c in f.items()}


def multiplicity(f: BiPoly) -> int:
    if not f:
        raise ValueError("the zero polynomial has no multiplicity")
    return min(i + j for i, j in f)


def tangent_cone(f: BiPoly) -> dict:
    """{j: c_j} with the cone equal to sum c_j x^(m-j) y^j."""
    m = multiplicity(f)
    return {j: c for (i, j), c in f.items() if i + j == m}


def _blow_slope(E: GF2k, f: BiPoly, lam: int, m: int) -> BiPoly:
    # y = x (y1 + lam), then divide by x^m
    out: dict = {}
    for (i, j), c in f.items():
        for k in _subsets(j):
            v = E.mul(c, E.pow(lam, j - k))
            if v:
                key = (i + j - m, k)
                out[key] = out.get(key, 0) ^ v
    return strip(out)


def _blow_vertical(f: BiPoly, m: int) -> BiPoly:
    # x = x1 y, then divide by y^m
    return {(i, i + j - m): c for (i, j), c in f.items()}


@dataclass(frozen=True)
class LocalInvariants:
    delta: int
    branches: int
    multiplicity: int

    @property
    def intersection(self) -> int | None:
        """Intersection number of two smooth branches (then it equals delta)."""
        if self.branches == 2 and self.multiplicity == 2:
            return self.delta
        return None

    def as_tuple(self) -> tuple:
        return (self.delta, self.branches, self.multiplicity)


def _resolve(E: GF2k, f: BiPoly, depth: int, max_depth: int) -> tuple[int, int]:
    if depth > max_depth:
        raise ValueError("blowup sequence does not terminate: the curve is not reduced here")
    m = multiplicity(f)
    if m == 0:
        raise ValueError("the point does not lie on the curve")
    if m == 1:
        return 0, 1
    cone = tangent_cone(f)
    slope_poly = upoly.strip(cone.get(j, 0) for j in range(m + 1))
    delta, branches = m * (m - 1) // 2, 0
    if len(slope_poly) > 1:
        emb, lams = split_roots(E, slope_poly)
        g = f if emb.big is E else lift(f, emb)
        for lam in lams:
            d, b = _resolve(emb.big, _blow_slope(emb.big, g, lam, m), depth + 1, max_depth)
            delta, branches = delta + d, branches + b
    if not cone.get(m):
        d, b = _resolve(E, _blow_vertical(f, m), depth + 1, max_depth)
        delta, branches = delta + d, branches + b
    return delta, branches


def delta_invariant(E: GF2k, f: BiPoly, max_depth: int = 64) -> LocalInvariants:
    """(delta, branches, multiplicity) of f = 0 at the origin."""
    f = strip(f)
    if not f:
        raise ValueError("the zero polynomial defines no curve")
    if (0, 0) in f:
        raise ValueError("the point does not lie on the curve")
    m = multiplicity(f)
    d, b = _resolve(E, f, 0, max_depth)
    return LocalInvariants(d, b, m)
