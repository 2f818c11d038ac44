from fractions import Fraction

import pytest
from hypothesis import strategies as st

from plcommute.plmap import make_plmap, parse_plmap

G_EX = "0,0; 3/8,3/4; 3/4,1; 7/8,3/4; 1,0"
PSI_EX = "0,0; 1/4,3/4; 1/2,1; 3/4,3/4; 5/6,0; 11/12,3/4; 1,1"
H_EX = "0,0; 1/2,3/4; 1,1"


@pytest.fixture
def g_ex():
    return parse_plmap(G_EX)


@pytest.fixture
def psi_ex():
    return parse_plmap(PSI_EX)


@pytest.fixture
def h_ex():
    return parse_plmap(H_EX)


unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=60)
open_unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=60).filter(
    lambda q: 0 < q < 1)


@st.composite
def pl_maps(draw, max_kinks=5):
    xs = draw(st.lists(open_unit_rationals, max_size=max_kinks, unique=True))
    xs = [Fraction(0)] + sorted(xs) + [Fraction(1)]
    ys = draw(st.lists(unit_rationals, min_size=len(xs), max_size=len(xs)))
    return make_plmap(zip(xs, ys))


@st.composite
def homeomorphisms(draw, max_kinks=3):
    k = draw(st.integers(0, max_kinks))
    xs = draw(st.lists(open_unit_rationals, min_size=k, max_size=k, unique=True))
    ys = draw(st.lists(open_unit_rationals, min_size=k, max_size=k, unique=True))
    pts = [(0, 0)] + list(zip(sorted(xs), sorted(ys))) + [(1, 1)]
    return make_plmap(pts)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
