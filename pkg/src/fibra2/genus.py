"""Genus reports shared by the classifiers and the series engine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PrimeDegree:
    """One candidate singular prime and its singularity degree."""

    center: str
    delta: int
    residue: str = "K"
    branch: str = ""


@dataclass(frozen=True)
class GenusReport:
    g: int
    g_bar: int
    g1: int
    prime_degrees: tuple = ()
    case: str = ""
    extension_degree: int = 1  # m when the computation ran over GF(2^(k m))(s)
    notes: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        # Rosenlicht: g - g_bar is the sum of the singularity degrees
        if self.g - self.g_bar != sum(p.delta for p in self.prime_degrees):
            raise AssertionError(f"genus drop bookkeeping violated in {self}")

    @property
    def deltas(self) -> tuple:
        return tuple(p.delta for p in self.prime_degrees)

    def to_json(self) -> dict:
        return {
            "genus": self.g,
            "genus_bar": self.g_bar,
            "g1": self.g1,
            "case": self.case,
            "extension_degree": self.extension_degree,
            "primes": [
                {"center": p.center, "delta": p.delta, "residue": p.residue, "branch": p.branch}
                for p in self.prime_degrees
            ],
        }


class NotGeometricallyElliptic(ValueError):
    """Raised for separable normal forms with vanishing discriminant."""
