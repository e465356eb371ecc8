import random

import pytest
from hypothesis import strategies as st

from fibra2.field_arith import RatFunc, gf, random_ratfunc

GF2 = gf(1)
GF4 = gf(2)


@pytest.fixture
def F():
    return GF2


@pytest.fixture
def F4():
    return GF4


def K(text, field=GF2):
    return RatFunc.parse(field, text)


@st.composite
def ratfuncs(draw, field=GF2, max_degree=3, nonzero=False):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return random_ratfunc(field, rng, max_degree, p_zero=0.0 if nonzero else 0.2)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
