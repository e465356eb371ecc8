import json

import pytest

from fibra2.cli import main
from fibra2.curve_model import parse_model, reduce_to_normal_form
from fibra2.field_arith import gf, parse_gf


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_fiber(capsys):
    code, out, _ = run(capsys, "classify", "fiber", "--family", "Z", "--k", "1", "--params", "0,1,1,0,1")
    assert code == 0
    assert out.splitlines()[0] == "EllipticCusp j=1"


def test_classify_fiber_json(capsys):
    code, out, _ = run(capsys, "classify", "fiber", "--k", "2", "--params", "1,1,1,1,1", "--json")
    assert code == 0
    assert json.loads(out)["class"] == "RationalTacnode"


def test_classify_insep_field(capsys):
    code, out, _ = run(capsys, "classify", "field", "--insep", "--b", "x^5+s")
    assert code == 0
    assert out.splitlines()[1] == "genus 2, geometrically rational"


def test_classify_sep_field_exception(capsys):
    code, out, _ = run(capsys, "classify", "field", "--sep", "--a0", "1", "--a2", "0", "--b6", "s^2", "--oracle")
    assert code == 0
    assert "genus 1, geometrically elliptic" in out
    assert "agrees" in out


def test_vanishing_delta_exits_2(capsys):
    code, _, err = run(capsys, "classify", "field", "--a0", "1", "--a2", "1", "--b0", "1", "--b4", "1", "--b6", "1")
    assert code == 2 and err.startswith("unsupported")


def test_geometric_splitting_exits_2(capsys):
    code, _, _ = run(capsys, "classify", "field", "--insep", "--b", "x^5+x^3+s*x")
    assert code == 2


def test_parse_error_points_at_column(capsys):
    code, _, err = run(capsys, "classify", "field", "--model", "y^2 + (x^3+*s)*y = 0")
    assert code == 1
    lines = err.splitlines()
    text, caret = lines[1], lines[2]
    assert text[caret.index("^")] == "*"


def test_usage_errors(capsys):
    assert run(capsys, "classify", "fiber", "--params", "0,1")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_sweep_rows(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "Y", "--k", "2")
    assert code == 0
    assert len(out.splitlines()) == 2 + 16


def test_sweep_cap(capsys, monkeypatch):
    monkeypatch.setenv("FIBRA2_CAP", "4")
    code, _, err = run(capsys, "sweep", "--family", "Z")
    assert code == 1 and "32" in err


def test_sweep_to_file(capsys, tmp_path):
    target = tmp_path / "z.csv"
    assert run(capsys, "sweep", "--output", str(target))[0] == 0
    assert len(target.read_text().splitlines()) == 34


def test_output_is_byte_identical(capsys):
    argv = ["verify", "--suite", "j-crosscheck", "--k", "4", "--samples", "50"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    assert "seed 20240229" in first.splitlines()[0]


def test_verify_fiber_oracles_gf4(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fiber-oracles", "--k", "2")
    assert code == 0
    assert "1024" in out and "PASS" in out


def test_normal_form_round_trip(capsys):
    code, out, _ = run(capsys, "normal-form", "--model", "y^2 + x^2*y + x^6 + x^5 + s = 0")
    assert code == 0
    printed = out.splitlines()[0]
    m = parse_model(printed)
    assert reduce_to_normal_form(m).form == reduce_to_normal_form(parse_model("y^2 + x^2*y + x^6 + x^5 + s = 0")).form


def test_normal_form_obstructed(capsys):
    code, out, _ = run(capsys, "normal-form", "--model", "y^2 + y + x^5 + s = 0")
    assert code == 0 and out.startswith("Obstructed")


def test_params_line_round_trips(capsys):
    _, out, _ = run(capsys, "classify", "fiber", "--k", "2", "--params", "g,1,g+1,0,1")
    line = out.splitlines()[1]
    inner = line[line.index("(") + 1 : line.index(")")]
    F = gf(2)
    assert [parse_gf(F, v) for v in inner.split(",")] == [2, 1, 3, 0, 1]
