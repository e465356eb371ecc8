"""The eight acceptance criteria, each run at its stated size and tolerance.

Every criterion prints one PASS/FAIL line.  Under pytest the lines are
repeated in the terminal summary; ``python3 tests/test_acceptance.py`` runs
them without pytest.
"""

import sys

import pytest

from fibra2 import verify as vf

RESULTS = []

CRITERIA = [
    # (number, title, suite, kwargs, time limit in seconds or None)
    (1, "exhaustive fiber-oracle agreement over GF(2) and GF(4)", "fiber-oracles", {"ks": (1, 2)}, 60),
    (2, "delta sums on integral fibers", "bookkeeping", {"ks": (1, 2)}, None),
    (3, "Weierstrass j against a2^6/Delta^(1/2), 1000 draws over GF(256)", "j-crosscheck", {"k": 8, "samples": 1000}, 10),
    (4, "genus predicates against the series engine, 500 + 500 draws", "genus-equivalence", {"samples": 500, "max_degree": 4}, 120),
    (5, "series residual order >= 10 at N = 12, 100 draws per branch", "series-residuals", {"samples": 100, "N": 12}, None),
    (6, "exception predicate against the normalized square-class tests", "c2-consistency", {"samples": 200}, None),
    (7, "pinned desk examples", "examples", {}, None),
    (8, "invariance under 200 random coordinate changes", "invariance", {"samples": 200}, None),
]


def run_criterion(number, title, suite, kwargs, limit):
    res = vf.SUITES[suite](**kwargs)
    ok = res.passed and (limit is None or res.elapsed < limit)
    timing = f"{res.elapsed:.1f}s" + ("" if limit is None else f" (limit {limit}s)")
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}; checked={res.checked} failures={len(res.failures)}; {timing}"
    RESULTS.append(line)
    print(line)
    return res, ok


@pytest.mark.parametrize("number, title, suite, kwargs, limit", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(number, title, suite, kwargs, limit):
    res, ok = run_criterion(number, title, suite, kwargs, limit)
    assert res.failures == []
    assert res.checked > 0
    if limit is not None:
        assert res.elapsed < limit


def test_criterion_sizes():
    # the exhaustive ranges are fixed: 32 + 1024 Z-tuples
    assert vf.suite_fiber_oracles(ks=(1,)).checked == 32


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        failed += not run_criterion(*c)[1]
    sys.exit(1 if failed else 0)
