"""Command line interface: ``fibra2 classify|sweep|verify|normal-form``.

Exit codes: 0 success, 1 usage or parse error (and failed verification),
2 input outside what the library decides.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import fiber_geometry as fg
from . import verify as vf
from .classifier_inseparable import genus_inseparable
from .classifier_separable import cor_c2_case, discriminant_delta, genus_separable
from .curve_model import (
    InseparableNormalForm,
    Obstructed,
    SeparableNormalForm,
    format_model,
    parse_model,
    reduce_to_normal_form,
)
from .field_arith import ParseError, Unsupported, gf, parse_gf
from .field_arith.text import parse_binary_poly
from .genus import NotGeometricallyElliptic
from .series_engine import genus_via_rosenlicht
from .sweep import CapExceeded, SweepPlan, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2


class UsageError(ValueError):
    pass


def _field(args):
    mod = parse_binary_poly(args.modulus) if args.modulus else None
    return gf(args.k, mod)


def _emit(args, data: dict, lines: list) -> None:
    if args.json:
        print(json.dumps(data, indent=1, sort_keys=True))
    else:
        print("\n".join(lines))


# -- classify ---------------------------------------------------------------------------


def cmd_classify_fiber(args) -> int:
    F = _field(args)
    n = fg.FAMILIES.get(args.family)
    if n is None:
        raise UsageError(f"unknown family {args.family!r}")
    parts = [p.strip() for p in args.params.split(",")] if args.params else []
    if len(parts) != n:
        raise UsageError(f"family {args.family} takes {n} parameters {fg.FAMILY_FIELDS[args.family]}, got {len(parts)}")
    p = fg.FiberParams(args.family, F, tuple(parse_gf(F, v) for v in parts))
    c = fg.classify_fiber_sub(p) if p.family == "V" else fg.classify_fiber(p)
    head = c.tag + ("" if c.j is None else f" j={F.format(c.j)}")
    lines = [head, f"params: {args.family}{p.text()} over GF(2^{F.k})", f"integral: {'yes' if c.integral else 'no'}"]
    for r in c.records:
        extra = f" intersection={r.intersection}" if r.intersection is not None else ""
        if r.point.field is not F:
            extra += f" (over GF(2^{r.point.field.k}))"
        lines.append(
            f"point {r.point}: {r.local_type} delta={r.delta} branches={r.branches} multiplicity={r.multiplicity}{extra}"
        )
    if c.integral:
        lines.append(f"delta sum: {c.delta_sum()} (geometric genus {c.g_bar})")
    _emit(args, c.to_json(), lines)
    return EXIT_OK


def _field_input(args, F):
    """A normal form from --sep / --insep / --model."""
    if args.model:
        m = parse_model(args.model, F)
    elif args.insep:
        if not args.b:
            raise UsageError("--insep needs --b")
        m = parse_model(f"y^2 = {args.b}", F)
    else:
        nf = SeparableNormalForm.of(F, args.a0, args.a2, args.b0, args.b4, args.b6)
        return nf, None
    out = reduce_to_normal_form(m)
    if isinstance(out.form, Obstructed):
        raise Unsupported(f"no normal form: {out.form.reason}")
    return out.form, out


def _genus_lines(report, nf) -> list:
    lines = [f"genus {report.g}, " + ("geometrically elliptic" if report.g_bar == 1 else "geometrically rational")]
    lines.append(f"g_bar: {report.g_bar}  g1: {report.g1}  case: {report.case}")
    if report.extension_degree > 1:
        lines.append(f"computed over GF(2^{nf.field.k * report.extension_degree})(s)")
    for p in report.prime_degrees:
        lines.append(f"prime {p.center}: delta={p.delta} residue={p.residue} [{p.branch}]")
    return lines


def cmd_classify_field(args) -> int:
    F = _field(args)
    nf, _ = _field_input(args, F)
    lines = [f"normal form: {format_model(nf.model())}"]
    data = {"normal_form": format_model(nf.model())}
    if isinstance(nf, SeparableNormalForm):
        inv = discriminant_delta(nf)
        report = genus_separable(nf)
        case = cor_c2_case(nf)
        lines += _genus_lines(report, nf)
        lines.append(f"Delta: {inv.delta}  j1: {inv.j1}  jbar: {inv.jbar_text()}")
        lines.append(f"normalized case {case.tag}: {format_model(case.form.model())}")
        data.update(type="separable", invariants=inv.to_json(), c2=case.to_json())
    else:
        report = genus_inseparable(nf)
        lines += _genus_lines(report, nf)
        data["type"] = "inseparable"
    data["genus"] = report.to_json()
    if args.oracle:
        other = genus_via_rosenlicht(nf)
        agree = (other.g, other.g_bar) == (report.g, report.g_bar)
        lines.append(f"series oracle: genus {other.g} ({'agrees' if agree else 'DISAGREES'})")
        data["oracle"] = other.to_json()
    _emit(args, data, lines)
    return EXIT_OK


# -- normal form ---------------------------------------------------------------------------


def cmd_normal_form(args) -> int:
    F = _field(args)
    m = parse_model(args.model, F)
    out = reduce_to_normal_form(m)
    t = out.transformation
    trans = {
        "mobius": [str(c) for c in t.mobius],
        "beta": str(t.beta),
        "gamma": [str(c) for c in t.gamma],
    }
    if isinstance(out.form, Obstructed):
        name, value = out.form.residual or ("-", "-")
        lines = [f"Obstructed: {out.form.reason} ({name} = {value})"]
        data = {"kind": "Obstructed", "reason": out.form.reason, "residual": [name, str(value)]}
    else:
        form = out.form
        lines = [format_model(form.model())]
        if isinstance(form, SeparableNormalForm):
            names, vals = fg.FAMILY_FIELDS["Z"], form.as_tuple()
        else:
            names, vals = ("b0", "b1", "b2", "b3", "b4", "b6"), (form.b0, form.b1, form.b2, form.b3, form.b4, form.b6)
        lines.append("params: " + ", ".join(f"{n}={v}" for n, v in zip(names, vals)))
        data = {"kind": out.kind, "model": lines[0], "params": {n: str(v) for n, v in zip(names, vals)}}
    lines.append(f"transformation: mobius=({', '.join(trans['mobius'])}) beta={trans['beta']} gamma=({', '.join(trans['gamma'])})")
    data["transformation"] = trans
    _emit(args, data, lines)
    return EXIT_OK


# -- sweep and verify ----------------------------------------------------------------------


def cmd_sweep(args) -> int:
    F = _field(args)
    plan = SweepPlan.parse(args.family, F, args.params, args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            run_sweep(plan, fh)
    else:
        sys.stdout.write(run_sweep(plan))
    return EXIT_OK


def _suite_kwargs(name: str, args) -> dict:
    kw = {}
    if name in ("fiber-oracles", "bookkeeping"):
        if args.k is not None:
            kw["ks"] = (args.k,)
        if args.family:
            kw["family"] = args.family
    elif name == "j-crosscheck" and args.k is not None:
        kw["k"] = args.k
    if name not in ("fiber-oracles", "bookkeeping", "examples"):
        kw["seed"] = args.seed
        if args.samples is not None:
            kw["samples"] = args.samples
    return kw


def cmd_verify(args) -> int:
    names = list(vf.SUITES) if args.suite == "all" else [args.suite]
    print(f"# fibra2 {__version__}; seed {args.seed}")
    ok = True
    for name in names:
        res = vf.SUITES[name](**_suite_kwargs(name, args))
        print(res.line())
        print(f"{name}: {res.elapsed:.2f}s", file=sys.stderr)
        for msg in res.failures[: vf.MAX_REPORTED]:
            print(f"  {msg}")
        ok &= res.passed
    return EXIT_OK if ok else EXIT_USAGE


# -- argument parsing -------------------------------------------------------------------------


def _add_field_args(p, default_k=1):
    p.add_argument("--k", type=int, default=default_k, help="constant field GF(2^k)")
    p.add_argument("--modulus", help="defining polynomial of GF(2^k), e.g. g^2+g+1")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fibra2", description="Genus-2 function fields and fibrations in characteristic 2.")
    ap.add_argument("--version", action="version", version=f"fibra2 {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    cl = sub.add_parser("classify", help="classify a closed fiber or a function field")
    csub = cl.add_subparsers(dest="what", required=True)
    pf = csub.add_parser("fiber", help="closed fiber over GF(2^k)")
    pf.add_argument("--family", default="Z", choices=sorted(fg.FAMILIES))
    pf.add_argument("--params", required=True, help="comma separated coefficients, e.g. 0,1,1,0,1")
    _add_field_args(pf)
    pf.set_defaults(func=cmd_classify_fiber)

    pk = csub.add_parser("field", help="genus of a field over GF(2^k)(s)")
    kind = pk.add_mutually_exclusive_group()
    kind.add_argument("--sep", action="store_true", help="separable normal form from --a0 --a2 --b0 --b4 --b6 (default)")
    kind.add_argument("--insep", action="store_true", help="y^2 = b(x) from --b")
    kind.add_argument("--model", help='any model, e.g. "y^2 + x^2*y + x^6 + s = 0"')
    for name in ("a0", "a2", "b0", "b4", "b6"):
        pk.add_argument(f"--{name}", default="0")
    pk.add_argument("--b", help="b(x) for --insep, e.g. x^5+s")
    pk.add_argument("--oracle", action="store_true", help="also run the series engine")
    _add_field_args(pk)
    pk.set_defaults(func=cmd_classify_field)

    sw = sub.add_parser("sweep", help="classify every fiber of a family over a parameter range")
    sw.add_argument("--family", default="Z", choices=sorted(fg.FAMILIES))
    sw.add_argument("--params", help="per coordinate '*' or 'v1|v2', comma separated (default: all)")
    sw.add_argument("--format", default="csv", choices=("csv", "json"))
    sw.add_argument("--output", help="write to a file instead of standard output")
    sw.add_argument("--k", type=int, default=1)
    sw.add_argument("--modulus")
    sw.set_defaults(func=cmd_sweep)

    ve = sub.add_parser("verify", help="run the oracle cross-check suites")
    ve.add_argument("--suite", default="all", choices=["all", *vf.SUITES])
    ve.add_argument("--k", type=int)
    ve.add_argument("--family", choices=sorted(fg.FAMILIES))
    ve.add_argument("--samples", type=int)
    ve.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    ve.set_defaults(func=cmd_verify)

    nfp = sub.add_parser("normal-form", help="reduce a model to its normal form")
    nfp.add_argument("--model", required=True)
    _add_field_args(nfp)
    nfp.set_defaults(func=cmd_normal_form)
    return ap


def _parse_diagnostic(e: ParseError) -> str:
    return f"error: {e}\n  {e.text}\n  {' ' * e.pos}^"


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as e:
        print(_parse_diagnostic(e), file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (Unsupported, NotGeometricallyElliptic) as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
