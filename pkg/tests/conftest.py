from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from hopf72.symgroup import ParamVector

GENERIC = ParamVector([1, 2, -3])
SUBGENERIC = ParamVector([2, -1, -1])
ZERO = ParamVector([0, 0, 0])
NAMED = {"generic": GENERIC, "sub-generic": SUBGENERIC, "zero": ZERO}


@lru_cache(maxsize=None)
def coalgebra(a):
    from hopf72.hopf import build_coalgebra
    from hopf72.repcore import algebra

    return build_coalgebra(algebra(a))


small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def sum_zero(draw):
    x = draw(small_rationals)
    y = draw(small_rationals)
    return ParamVector([x, y, -x - y])


@pytest.fixture(params=list(NAMED), ids=list(NAMED))
def named(request):
    return request.param, NAMED[request.param]


def frac(*xs):
    return [Fraction(x) for x in xs]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
