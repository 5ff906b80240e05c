from fractions import Fraction

import pytest
from hypothesis import strategies as st

from twistalex.algebra import CycloNumber, LaurentPoly, euler_phi
from twistalex.group import abelianization
from twistalex.knots import builtin_lin, list_examples
from twistalex.representations import enumerate_metabelian, working_modulus
from twistalex.twisted import alexander_polynomial, knot_determinant

ACCEPTANCE_LINES: list[str] = []

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cyclo_numbers(draw, m):
    coords = draw(st.lists(small_rationals, min_size=euler_phi(m), max_size=euler_phi(m)))
    return CycloNumber(m, coords)


@st.composite
def laurent_polys(draw, m, max_terms=4):
    exps = draw(st.lists(st.integers(-3, 3), max_size=max_terms, unique=True))
    return LaurentPoly(m, {d: draw(cyclo_numbers(m)) for d in exps})


def zeta(m, k=1):
    return CycloNumber.root(m, k)


def poly(m, coeffs):
    """Shorthand: ``{exponent: coefficient}`` -> LaurentPoly."""
    return LaurentPoly(m, coeffs)


class KnotData:
    def __init__(self, name):
        self.name = name
        self.L = builtin_lin(name)
        self.P = self.L.to_presentation()
        self.alpha = abelianization(self.P)
        self.delta = alexander_polynomial(self.P, self.alpha)
        self.n = knot_determinant(self.delta)
        self.m = working_modulus(self.n)
        self.classes = enumerate_metabelian(self.L, self.n)


_CACHE = {}


def knot_data(name) -> KnotData:
    if name not in _CACHE:
        _CACHE[name] = KnotData(name)
    return _CACHE[name]


@pytest.fixture(params=list_examples())
def knot(request):
    return knot_data(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["Fraction", "cyclo_numbers", "knot_data", "laurent_polys", "poly", "zeta"]
