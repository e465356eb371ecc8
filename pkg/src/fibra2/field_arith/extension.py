"""Constant field extensions GF(2^k) -> GF(2^(k*m)) with canonical embeddings."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from . import upoly
from .gf import GF2k, gf


@dataclass(frozen=True)
class Embedding:
    small: GF2k
    big: GF2k
    image_of_generator: int

    def __call__(self, a: int) -> int:
        # a = sum a_i g^i  ->  sum a_i rho^i
        r, p, big = 0, 1, self.big
        while a:
            if a & 1:
                r ^= p
            a >>= 1
            p = big.mul(p, self.image_of_generator)
        return r

    @functools.cached_property
    def table(self) -> list[int] | None:
        if self.small.order > 1 << 12:
            return None
        return [self(a) for a in range(self.small.order)]

    def map(self, a: int) -> int:
        t = self.table
        return t[a] if t is not None else self(a)

    def then(self, other: "Embedding") -> "Embedding":
        if other.small is not self.big:
            raise ValueError("embeddings do not compose")
        return Embedding(self.small, other.big, other(self.image_of_generator))


@functools.lru_cache(maxsize=None)
def extension(F: GF2k, m: int) -> Embedding:
    """The canonical embedding of F into GF(2^(k*m)) with default modulus.

    The generator g of F goes to the smallest root (as an int) of F's modulus
    inside the bigger field, so repeated calls agree on every point.
    """
    if m == 1:
        return Embedding(F, F, 2 if F.k > 1 else F.modulus & 1)
    big = gf(F.k * m)
    # modulus of F as a polynomial over big (coefficients 0/1)
    mod_poly = tuple((F.modulus >> i) & 1 for i in range(F.k + 1))
    rts = upoly.roots(big, mod_poly)
    if not rts:
        raise AssertionError("subfield modulus has no root in the extension")
    return Embedding(F, big, rts[0])


def identity(F: GF2k) -> Embedding:
    return extension(F, 1)


def splitting_degree(F: GF2k, f: upoly.Poly) -> int:
    """Smallest m such that f splits into linear factors over GF(2^(k*m))."""
    f = upoly.monic(F, f)
    if len(f) <= 2:
        return 1
    # reduce to the squarefree radical first
    rad: upoly.Poly = upoly.ONE
    for part in upoly.squarefree_factorization(F, f).values():
        rad = upoly.mul(F, rad, part)
    m = 1
    for d in upoly.distinct_degree_degrees(F, rad):
        m = math.lcm(m, d)
    return m


def split_roots(F: GF2k, f: upoly.Poly) -> tuple[Embedding, list[int]]:
    """Embed F into the splitting field of f and return all distinct roots there."""
    m = splitting_degree(F, f)
    emb = extension(F, m)
    lifted = tuple(emb.map(c) for c in f)
    return emb, upoly.roots(emb.big, lifted)
