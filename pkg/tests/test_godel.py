import random

import pytest

from dioph.field import standard_field
from dioph.godel import code_add, code_mul, decode, encode
from dioph.poly import Polynomial

from conftest import all_polys

F3 = standard_field(3)


def theta_oracle(f):
    """Positional value written out from the stated definition."""
    F = f.field
    total = 0
    for i, c in enumerate(f.coefficients()):
        digit = sum(x * F.p ** j for j, x in enumerate(F.coords(c)))
        total += digit * F.q ** i
    return total


def test_examples():
    assert encode(Polynomial.zero(F3)) == 0
    assert encode(Polynomial.t(F3)) == 3
    assert encode(Polynomial.from_codes(F3, [1, 0, 2])) == 19
    assert str(decode(10, F3)) == "t^2+1"
    assert str(decode(4, F3)) == "t+1"
    assert decode(0, standard_field(2)).is_zero()
    assert code_add(3, 1, F3) == 4
    assert code_add(1, 2, F3) == 0
    assert code_mul(4, 4, F3) == 16


@pytest.mark.parametrize("q", [2, 3, 4])
def test_round_trip_naturals(q):
    F = standard_field(q)
    for n in range(10 ** 4):
        assert encode(decode(n, F)) == n


@pytest.mark.parametrize("q", [2, 3, 4])
def test_round_trip_polys_and_oracle(q):
    F = standard_field(q)
    seen = set()
    for f in all_polys(F, 4):
        n = encode(f)
        assert n == theta_oracle(f)
        assert decode(n, F) == f
        seen.add(n)
    assert seen == set(range(q ** 5))  # bijective onto the degree <= 4 block


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_operations_transport(q):
    F = standard_field(q)
    rng = random.Random(q)
    for _ in range(1000):
        m, n = rng.randrange(q ** 6), rng.randrange(q ** 6)
        assert code_add(m, n, F) == encode(decode(m, F) + decode(n, F))
        assert code_mul(m, n, F) == encode(decode(m, F) * decode(n, F))
    for _ in range(200):
        a, b, c = (rng.randrange(q ** 4) for _ in range(3))
        assert code_add(a, b, F) == code_add(b, a, F)
        assert code_add(code_add(a, b, F), c, F) == code_add(a, code_add(b, c, F), F)
        assert code_mul(a, code_add(b, c, F), F) == code_add(code_mul(a, b, F), code_mul(a, c, F), F)
