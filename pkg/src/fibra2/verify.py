"""Cross-check suites shared by ``fibra2 verify`` and the test-suite.

Every suite returns a :class:`SuiteResult`; randomized suites take a seed
so that reruns are identical.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import fiber_geometry as fg
from .classifier_inseparable import genus_inseparable
from .classifier_separable import (
    c1_exception,
    cor_c2_case,
    discriminant_delta,
    genus_separable,
    is_geometrically_elliptic,
)
from .curve_model import (
    InseparableNormalForm,
    ModelTransformation,
    SeparableNormalForm,
    apply_transformation,
    compose,
    reduce_to_inseparable_normal_form,
    reduce_to_separable_normal_form,
)
from .field_arith import RatFunc, Unsupported, gf, random_ratfunc
from .series_engine import (
    RULES,
    expand_local_series,
    genus_via_rosenlicht,
    random_branch_instance,
)

DEFAULT_SEED = 20240229
MAX_REPORTED = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def line(self, timing: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.info.items()))
        if timing:
            extra += f" time={self.elapsed:.2f}s"
        return f"{status} {self.name}: checked={self.checked} failures={len(self.failures)}{extra}"


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- fibers ------------------------------------------------------------------------------


def check_fiber(p: fg.FiberParams) -> list:
    """Disagreements between the classifier and the oracles at one parameter point."""
    errs = []
    c = fg.classify_fiber_sub(p) if p.family == "V" else fg.classify_fiber(p)
    loc = fg.jacobian_singular_locus(p)
    if c.tag == "NonReducedDouble":
        if not loc.non_reduced:
            errs.append(f"{p.text()}: non-reduced class but the Jacobian locus is finite")
        return errs
    if list(loc.points) != c.singular_set():
        got = ", ".join(map(str, loc.points))
        want = ", ".join(map(str, c.singular_set()))
        errs.append(f"{p.text()}: singular set {want} != Jacobian locus {got}")
    for r in c.records:
        inv = fg.local_delta(p, r.point)
        if inv.as_tuple() != r.invariants():
            errs.append(f"{p.text()} at {r.point}: record {r.invariants()} != blowup {inv.as_tuple()}")
        if not r.point.on_cone() or fg.fiber_value(p, r.point):
            errs.append(f"{p.text()}: {r.point} is not on the fiber")
    return errs


@_timed
def suite_fiber_oracles(ks=(1, 2), family: str = "Z") -> SuiteResult:
    """Classifier singular sets and local invariants against the Jacobian and blowup oracles."""
    res = SuiteResult("fiber-oracles")
    for k in ks:
        for p in fg.iter_params(family, gf(k)):
            res.checked += 1
            for e in check_fiber(p):
                res.fail(e)
    res.info["family"] = family
    return res


@_timed
def suite_bookkeeping(ks=(1, 2), family: str = "Z") -> SuiteResult:
    """Sum of deltas equals 2 - g_bar on every integral fiber."""
    res = SuiteResult("bookkeeping")
    integral = 0
    for k in ks:
        for p in fg.iter_params(family, gf(k)):
            c = fg.classify_fiber_sub(p) if family == "V" else fg.classify_fiber(p)
            res.checked += 1
            if not c.integral:
                continue
            integral += 1
            if c.delta_sum() != 2 - c.g_bar:
                res.fail(f"{p.text()}: {c.tag} has delta sum {c.delta_sum()}, expected {2 - c.g_bar}")
    res.info["integral"] = integral
    return res


@_timed
def suite_j_crosscheck(k: int = 8, samples: int = 1000, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Weierstrass j of the pullback against a2^6 / Delta^(1/2)."""
    res = SuiteResult("j-crosscheck")
    F, rng = gf(k), random.Random(seed)
    while res.checked < samples:
        p = fg.FiberParams.Z(F, *(rng.randrange(F.order) for _ in range(5)))
        if not fg.delta(F, *p.coeffs):
            continue
        res.checked += 1
        a, b = fg.weierstrass_j(p), fg.fiber_j(p)
        if a != b:
            res.fail(f"{p.text()}: Weierstrass {F.format(a)} != formula {F.format(b)}")
    return res


# -- genus -----------------------------------------------------------------------------


def random_separable(F, rng, max_degree: int) -> SeparableNormalForm:
    while True:
        nf = SeparableNormalForm(*(random_ratfunc(F, rng, max_degree) for _ in range(5)))
        if is_geometrically_elliptic(nf):
            return nf


def random_inseparable(F, rng, max_degree: int) -> InseparableNormalForm:
    return InseparableNormalForm(*(random_ratfunc(F, rng, max_degree) for _ in range(6)))


def _report_key(r) -> tuple:
    return (r.g, r.g_bar, r.g1)


@_timed
def suite_genus_equivalence(
    samples: int = 500, ks=(1, 2), max_degree: int = 4, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """Closed-form genus predicates against the series engine."""
    res = SuiteResult("genus-equivalence")
    rng = random.Random(seed)
    seen_sep, seen_insep, unsupported = 0, 0, 0
    while seen_sep < samples:
        F = gf(ks[seen_sep % len(ks)])
        nf = random_separable(F, rng, max_degree)
        seen_sep += 1
        a, b = genus_separable(nf), genus_via_rosenlicht(nf)
        if _report_key(a) != _report_key(b) or a.deltas != b.deltas:
            res.fail(f"separable {nf.as_tuple()}: classifier g={a.g}, series g={b.g}")
    attempts = 0
    while seen_insep < samples and attempts < 50 * samples:
        attempts += 1
        F = gf(ks[attempts % len(ks)])
        nf = random_inseparable(F, rng, max_degree)
        try:
            a = genus_inseparable(nf)
        except Unsupported:
            unsupported += 1
            continue
        seen_insep += 1
        b = genus_via_rosenlicht(nf)
        if _report_key(a) != _report_key(b) or sorted(a.deltas) != sorted(b.deltas):
            res.fail(f"inseparable {nf.b}: classifier g={a.g}, series g={b.g}")
    res.checked = seen_sep + seen_insep
    res.info.update(separable=seen_sep, inseparable=seen_insep, unsupported_skipped=unsupported)
    if seen_insep < samples:
        res.fail(f"only {seen_insep} supported inseparable samples drawn")
    return res


@_timed
def suite_series_residuals(
    samples: int = 100, N: int = 12, ks=(1, 2), max_degree: int = 2, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """Residual order of every branch expansion is at least N - 2."""
    res = SuiteResult("series-residuals")
    rng = random.Random(seed)
    worst = {}
    for branch in RULES:
        for i in range(samples):
            F = gf(ks[i % len(ks)])
            nf, spec = random_branch_instance(branch, F, rng, max_degree)
            order = expand_local_series(nf, spec, N).residual.order()
            worst[branch] = min(worst.get(branch, order), order)
            res.checked += 1
            if order < N - 2:
                res.fail(f"{branch}: residual order {order} < {N - 2} for {nf}")
    res.info["min_order"] = min(worst.values())
    return res


@_timed
def suite_c2_consistency(samples: int = 200, ks=(1, 2), max_degree: int = 3, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Exception predicate against the square-class condition of the normalized case."""
    res = SuiteResult("c2-consistency")
    rng = random.Random(seed)
    cases = {"i": 0, "ii": 0, "iii": 0}
    pools = {
        # bias draws so that all three cases occur: a2 = 0, a0/a2 square, a0/a2 not square
        "i": lambda F: (random_ratfunc(F, rng, max_degree, p_zero=0), RatFunc.constant(F, 0)),
        "ii": lambda F: _square_ratio(F, rng, max_degree),
        "iii": lambda F: (random_ratfunc(F, rng, max_degree), random_ratfunc(F, rng, max_degree, p_zero=0)),
    }
    order = list(pools)
    while res.checked < samples:
        F = gf(ks[res.checked % len(ks)])
        a0, a2 = pools[order[res.checked % 3]](F)
        rest = [random_ratfunc(F, rng, max_degree) for _ in range(3)]
        nf = SeparableNormalForm(a0, a2, *rest)
        if not is_geometrically_elliptic(nf):
            continue
        res.checked += 1
        exc = c1_exception(nf)
        case = cor_c2_case(nf)
        cases[case.tag] += 1
        if case.valid == exc:
            res.fail(f"{nf.as_tuple()}: case {case.tag} valid={case.valid} but exception={exc}")
        if c1_exception(case.form) != exc:
            res.fail(f"{nf.as_tuple()}: exception predicate not invariant under case-{case.tag} normalization")
        if genus_separable(case.form).g != genus_separable(nf).g:
            res.fail(f"{nf.as_tuple()}: genus changed under case-{case.tag} normalization")
    res.info.update({f"case_{k}": v for k, v in cases.items()})
    return res


def _square_ratio(F, rng, max_degree):
    a2 = random_ratfunc(F, rng, max_degree, p_zero=0)
    r = random_ratfunc(F, rng, max_degree)
    return a2 * r.frobenius(), a2


# -- desk examples -----------------------------------------------------------------------


@_timed
def suite_examples() -> SuiteResult:
    """Pinned small examples."""
    res = SuiteResult("examples")
    F = gf(1)

    def expect(label, cond):
        res.checked += 1
        if not cond:
            res.fail(label)

    nf = InseparableNormalForm.from_b(F, "x^5+s")
    r = genus_inseparable(nf)
    expect("x^5+s: genus 2, geometrically rational", r.g == 2 and r.g_bar == 0)
    nf = SeparableNormalForm.of(F, 1, 0, 0, 0, "s")
    r, inv = genus_separable(nf), discriminant_delta(nf)
    expect("(1,0,0,0,s): genus 2, elliptic, j1 = 0", r.g == 2 and r.g_bar == 1 and inv.delta and not inv.j1)
    r = genus_separable(SeparableNormalForm.of(F, 1, 0, 0, 0, "s^2"))
    expect("(1,0,0,0,s^2): genus 1", r.g == 1)
    expect("(1,1,1,1,1): RationalTacnode", fg.classify_fiber(fg.FiberParams.Z(F, 1, 1, 1, 1, 1)).tag == "RationalTacnode")
    expect("(1,0,0,1,0): RamphoidCusp", fg.classify_fiber(fg.FiberParams.Z(F, 1, 0, 0, 1, 0)).tag == "RamphoidCusp")
    v = fg.FiberParams("V", F, (0, 0, 0, 1, 0, 0))
    expect("V with b3 = 1: TwoCusps", fg.classify_fiber_sub(v).tag == "TwoCusps")
    return res


# -- invariance ---------------------------------------------------------------------------


def random_transformation(F, rng, max_degree: int = 1) -> ModelTransformation:
    r = lambda z=0.3: random_ratfunc(F, rng, max_degree, p_zero=z)  # noqa: E731
    while True:
        mob = (r(), r(), r(), r())
        if mob[0] * mob[3] + mob[1] * mob[2]:
            return ModelTransformation(mob, r(0), tuple(r(0.5) for _ in range(4)))


@_timed
def suite_invariance(samples: int = 200, ks=(1, 2), max_degree: int = 2, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Random coordinate changes keep j1 and the genus report; reduction round-trips."""
    res = SuiteResult("invariance")
    rng = random.Random(seed)
    insep = 0
    while res.checked < samples:
        F = gf(ks[res.checked % len(ks)])
        t = random_transformation(F, rng)
        res.checked += 1
        if res.checked % 4:
            nf = random_separable(F, rng, max_degree)
            m = apply_transformation(nf.model(), t)
            out = reduce_to_separable_normal_form(m)
            if not out.ok:
                res.fail(f"{nf.as_tuple()}: reduction obstructed after a coordinate change")
                continue
            if discriminant_delta(out.form).j1 != discriminant_delta(nf).j1:
                res.fail(f"{nf.as_tuple()}: j1 changed")
            if _report_key(genus_separable(out.form)) != _report_key(genus_separable(nf)):
                res.fail(f"{nf.as_tuple()}: genus report changed")
        else:
            nf = random_inseparable(F, rng, max_degree)
            m = apply_transformation(nf.model(), t)
            out = reduce_to_inseparable_normal_form(m)
            try:
                a = genus_inseparable(nf)
                b = genus_inseparable(out.form)
            except Unsupported:
                a = b = None
            if a is not None:
                insep += 1
                if _report_key(a) != _report_key(b):
                    res.fail(f"{nf.b}: genus report changed")
        if apply_transformation(m, out.transformation) != out.form.model():
            res.fail("normal form transformation does not reproduce the form")
        back = compose(t, out.transformation).inverse()
        if apply_transformation(out.form.model(), back) != nf.model():
            res.fail("round trip through the normal form does not return the original model")
    res.info["inseparable_compared"] = insep
    return res


SUITES = {
    "fiber-oracles": suite_fiber_oracles,
    "bookkeeping": suite_bookkeeping,
    "j-crosscheck": suite_j_crosscheck,
    "genus-equivalence": suite_genus_equivalence,
    "series-residuals": suite_series_residuals,
    "c2-consistency": suite_c2_consistency,
    "examples": suite_examples,
    "invariance": suite_invariance,
}
