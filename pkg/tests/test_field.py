import itertools

import pytest

from dioph.errors import FieldMismatch, ModulusNotMonic, NonPrime, ReducibleModulus
from dioph.field import (FieldElement, frobenius_root, is_prime, make_field,
                         standard_field)
from dioph.textio import parse_field

from conftest import elements


def test_make_field_examples():
    F3 = make_field(3)
    assert (F3.p, F3.n, F3.q) == (3, 1, 3)
    F4 = make_field(2, (1, 1, 1))
    assert (F4.p, F4.n, F4.q) == (2, 2, 4)
    with pytest.raises(ReducibleModulus):
        make_field(2, (1, 0, 1))  # x^2+1 = (x+1)^2


def test_make_field_errors():
    with pytest.raises(NonPrime):
        make_field(6)
    with pytest.raises(NonPrime):
        make_field(1)
    with pytest.raises(ModulusNotMonic):
        make_field(3, (1, 0, 2))


def test_is_prime_against_sieve():
    sieve = [True] * 500
    sieve[0] = sieve[1] = False
    for i in range(2, 500):
        if sieve[i]:
            for j in range(i * i, 500, i):
                sieve[j] = False
    assert [n for n in range(500) if is_prime(n)] == [n for n in range(500) if sieve[n]]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    F = standard_field(q)
    els = elements(F)
    zero, one = FieldElement(F, 0), FieldElement(F, 1)
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
        assert a ** q == a
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert (a - b) + b == a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_extension_multiplication_matches_coordinate_oracle():
    # independent oracle: schoolbook product of coordinate vectors reduced by the modulus
    for q in (4, 8, 9, 16, 25, 27):
        F = standard_field(q)
        p, mod = F.p, F.modulus
        n = len(mod) - 1

        def slow(a, b):
            prod = [0] * (2 * n - 1)
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
            for k in range(len(prod) - 1, n - 1, -1):
                c = prod[k]
                if c:
                    for i in range(n + 1):
                        prod[k - n + i] = (prod[k - n + i] - c * mod[i]) % p
            return prod[:n]

        for a in range(q):
            for b in range(q):
                assert F.coords(F.mul(a, b)) == slow(F.coords(a), F.coords(b))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_frobenius_root_exhaustive(q):
    F = standard_field(q)
    for c in elements(F):
        assert frobenius_root(c) ** F.p == c


def test_frobenius_root_examples():
    F3 = standard_field(3)
    assert frobenius_root(FieldElement(F3, 2)) == FieldElement(F3, 2)
    F4 = standard_field(4)
    w = F4.gen()
    assert frobenius_root(w) == w ** 2
    assert frobenius_root(FieldElement(F4, 0)) == FieldElement(F4, 0)


def test_field_mismatch():
    a = FieldElement(standard_field(3), 1)
    b = FieldElement(standard_field(5), 1)
    with pytest.raises(FieldMismatch):
        a + b


def test_field_spec_text():
    assert str(parse_field("GF(3)")) == "GF(3)"
    F = parse_field("GF(4;w^2+w+1)")
    assert F.q == 4 and str(F) == "GF(4;w^2+w+1)"
    assert parse_field(str(standard_field(27))) == standard_field(27)
    with pytest.raises(NonPrime):
        parse_field("GF(4)")
    with pytest.raises(ReducibleModulus):
        parse_field("GF(4;w^2+1)")
