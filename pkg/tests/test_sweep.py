import csv
import io
import json

import pytest

from fibra2.field_arith import gf
from fibra2.sweep import CSV_COLUMNS, CapExceeded, SweepPlan, run_sweep, sweep_cap

from conftest import GF2, GF4


def rows(text):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


def test_exhaustive_z_over_gf2():
    out = run_sweep(SweepPlan.parse("Z", GF2))
    assert out.startswith("# fibra2 ")
    assert "modulus g+1" in out.splitlines()[0]
    assert len(rows(out)) == 32


def test_exhaustive_y_over_gf4():
    assert len(rows(run_sweep(SweepPlan.parse("Y", GF4)))) == 16


def test_line_sweep():
    got = rows(run_sweep(SweepPlan.parse("Z", GF2, "0,1,1,0,*")))
    assert [r["class"] for r in got] == ["RationalCuspNode", "EllipticCusp"]
    assert list(got[0]) == list(CSV_COLUMNS)


def test_choice_syntax():
    plan = SweepPlan.parse("Y", GF4, "g|1, *")
    assert plan.count() == 8


def test_json_output():
    doc = json.loads(run_sweep(SweepPlan.parse("Y", GF2, fmt="json")))
    assert doc["field"] == {"k": 1, "modulus": "g+1"}
    assert len(doc["rows"]) == 4


def test_deterministic():
    plan = SweepPlan.parse("X", GF4)
    assert run_sweep(plan) == run_sweep(plan)


def test_cap(monkeypatch):
    monkeypatch.setenv("FIBRA2_CAP", "10")
    assert sweep_cap() == 10
    with pytest.raises(CapExceeded) as e:
        run_sweep(SweepPlan.parse("Z", GF2))
    assert e.value.count == 32
    monkeypatch.setenv("FIBRA2_CAP", "zero")
    with pytest.raises(ValueError):
        sweep_cap()


def test_default_cap_refuses_large_sweeps():
    plan = SweepPlan.parse("Z", gf(8))
    with pytest.raises(CapExceeded):
        plan.check_cap()


def test_bad_specs():
    with pytest.raises(ValueError):
        SweepPlan.parse("W", GF2)
    with pytest.raises(ValueError):
        SweepPlan.parse("Z", GF2, "0,1")
