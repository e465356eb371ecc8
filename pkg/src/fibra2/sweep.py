"""Parameter sweeps over fiber families, written as CSV or JSON."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
from dataclasses import dataclass

from . import __version__
from . import fiber_geometry as fg
from .field_arith import GF2k, format_gf2_poly, parse_gf

DEFAULT_CAP = 10**6
CSV_COLUMNS = ("family", "k", "params", "delta", "delta2", "class", "integral", "j", "points")


def sweep_cap() -> int:
    raw = os.environ.get("FIBRA2_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"FIBRA2_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("FIBRA2_CAP must be positive")
    return cap


class CapExceeded(ValueError):
    def __init__(self, count: int, cap: int):
        self.count, self.cap = count, cap
        super().__init__(f"sweep has {count} points, above the cap of {cap} (set FIBRA2_CAP to raise it)")


@dataclass(frozen=True)
class SweepPlan:
    family: str
    field: GF2k
    ranges: tuple  # one sorted tuple of field elements per coordinate
    fmt: str = "csv"

    @classmethod
    def parse(cls, family: str, F: GF2k, spec: str | None = None, fmt: str = "csv") -> "SweepPlan":
        """``spec`` is comma separated, one entry per coordinate: ``*`` or ``v1|v2|...``."""
        n = fg.FAMILIES.get(family)
        if n is None:
            raise ValueError(f"unknown family {family!r}; choose one of {', '.join(fg.FAMILIES)}")
        parts = ["*"] * n if not spec else [p.strip() for p in spec.split(",")]
        if len(parts) != n:
            raise ValueError(f"family {family} takes {n} coordinates, got {len(parts)}")
        ranges = []
        for p in parts:
            if p == "*":
                ranges.append(tuple(F.elements()))
            else:
                ranges.append(tuple(sorted({parse_gf(F, v) for v in p.split("|")})))
        if fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        return cls(family, F, tuple(ranges), fmt)

    def count(self) -> int:
        return math.prod(len(r) for r in self.ranges)

    def check_cap(self, cap: int | None = None) -> None:
        cap = sweep_cap() if cap is None else cap
        if self.count() > cap:
            raise CapExceeded(self.count(), cap)

    def points(self):
        for coeffs in itertools.product(*self.ranges):
            yield fg.FiberParams(self.family, self.field, coeffs)


def row(p: fg.FiberParams) -> dict:
    F = p.field
    c = fg.classify_fiber_sub(p) if p.family == "V" else fg.classify_fiber(p)
    if p.family == "V":
        d = d2 = "-"
    else:
        z = p.to_z().coeffs
        d, d2 = F.format(fg.delta(F, *z)), F.format(fg.delta2(F, *z))
    return {
        "family": p.family,
        "k": F.k,
        "params": p.text(),
        "delta": d,
        "delta2": d2,
        "class": c.tag,
        "integral": "yes" if c.integral else "no",
        "j": "-" if c.j is None else F.format(c.j),
        "points": ";".join(r.text() for r in c.records) or "-",
    }


def header_line(plan: SweepPlan) -> str:
    F = plan.field
    return f"# fibra2 {__version__}; GF(2^{F.k}) modulus {format_gf2_poly(F.modulus)}; family {plan.family}; points {plan.count()}"


def run_sweep(plan: SweepPlan, out=None) -> str:
    """Rows in lexicographic order of the parameter tuple."""
    plan.check_cap()
    rows = [row(p) for p in plan.points()]
    buf = io.StringIO() if out is None else out
    if plan.fmt == "csv":
        buf.write(header_line(plan) + "\n")
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        F = plan.field
        doc = {
            "version": __version__,
            "field": {"k": F.k, "modulus": format_gf2_poly(F.modulus)},
            "family": plan.family,
            "rows": rows,
        }
        json.dump(doc, buf, indent=1)
        buf.write("\n")
    return buf.getvalue() if out is None else ""
