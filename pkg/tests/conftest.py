import itertools
import random

import pytest

from dioph.field import FieldElement, standard_field
from dioph.poly import Polynomial
from dioph.ratfunc import RatFunc
from dioph.textio import parse_ratfunc

FIELD_QS = (2, 3, 4, 5, 8, 9)


@pytest.fixture(scope="session")
def fields():
    return {q: standard_field(q) for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)}


def rf(text, F):
    return parse_ratfunc(text, F)


def random_poly(F, rng, max_deg):
    d = rng.randint(-1, max_deg)
    return Polynomial.from_codes(F, [rng.randrange(F.q) for _ in range(d + 1)])


def random_ratfunc(F, rng, max_h, nonzero=False):
    while True:
        num = random_poly(F, rng, max_h)
        den = random_poly(F, rng, max_h)
        if den.is_zero() or (nonzero and num.is_zero()):
            continue
        return RatFunc(num, den)


def all_polys(F, max_deg):
    """Every polynomial of degree <= max_deg, independent of the encoder."""
    for cs in itertools.product(range(F.q), repeat=max_deg + 1):
        yield Polynomial.from_codes(F, cs)


def elements(F):
    return [FieldElement(F, c) for c in range(F.q)]


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    lines = mod.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
