import itertools
import random

import pytest

from dioph.artin_schreier import (artin_schreier_operator, as_solve, as_solve_constant,
                                  trace_to_prime)
from dioph.field import FieldElement, standard_field
from dioph.formula import Sat, evaluate, parse
from dioph.ratfunc import Place, RatFunc, enumerate_by_height

from conftest import elements, random_ratfunc, rf

F2, F3, F4 = standard_field(2), standard_field(3), standard_field(4)


def in_prime_field(x: RatFunc) -> bool:
    return x.is_constant() and (x.num.is_zero() or x.num.lead_code < x.field.p)


def test_operator_examples():
    assert artin_schreier_operator(rf("t", F3)) == rf("t^3-t", F3)
    assert artin_schreier_operator(RatFunc.zero(F3)).num.is_zero()
    assert artin_schreier_operator(rf("1/t", F2)) == rf("(t+1)/t^2", F2)


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_operator_additive(q, rng):
    F = standard_field(q)
    for _ in range(100):
        u, w = random_ratfunc(F, rng, 3), random_ratfunc(F, rng, 3)
        assert artin_schreier_operator(u + w) == artin_schreier_operator(u) + artin_schreier_operator(w)


def test_trace_examples():
    assert trace_to_prime(FieldElement(F4, 1)) == 0
    assert trace_to_prime(F4.gen()) == 1
    assert trace_to_prime(FieldElement(F3, 2)) == 2


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27])
def test_trace_is_direct_sum(q):
    F = standard_field(q)
    for c in elements(F):
        s = FieldElement(F, 0)
        for i in range(F.n):
            s = s + c ** (F.p ** i)
        assert s.code < F.p and trace_to_prime(c) == s.code


def test_constant_examples():
    r = as_solve_constant(FieldElement(F3, 0))
    assert r.sat and r.witness.num.is_zero()
    r = as_solve_constant(FieldElement(F3, 1))
    assert not r.sat and r.reason.kind == "trace"
    r = as_solve_constant(FieldElement(F4, 1))
    assert r.sat and str(r.witness) == "w"


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_constant_criterion(q):
    F = standard_field(q)
    image = {(u ** F.p - u).code for u in elements(F)}  # exhaust the operator
    solvable = set()
    for c in elements(F):
        r = as_solve_constant(c)
        assert r.sat == (trace_to_prime(c) == 0)
        if r.sat:
            solvable.add(c.code)
            u = r.witness.num.lead_code if r.witness else 0
            u = FieldElement(F, u)
            assert u ** F.p - u == c
            # canonical witness: minimal code among the F_p-coset of solutions
            assert u.code == min(v.code for v in elements(F) if v ** F.p - v == c)
    assert solvable == image and len(solvable) == q // F.p


def test_as_solve_examples():
    r = as_solve(rf("t^9-t", F3))
    assert r.sat and str(r.witness) == "t^3+t"
    r = as_solve(rf("t", F3))
    assert not r.sat and r.reason.kind == "degree" and r.reason.degree == 1
    r = as_solve(rf("1/t^2", F2))
    assert not r.sat and r.reason.kind == "pole-order"
    assert r.reason.place == Place.zero() and r.reason.order == 1
    r = as_solve(rf("1/t^2+1/t", F2))
    assert r.sat and str(r.witness) == "1/t"


@pytest.mark.parametrize("F", [F2, F3], ids=["F2", "F3"])
def test_round_trip_exhaustive_height3(F):
    for u in enumerate_by_height(F, 3):
        f = artin_schreier_operator(u)
        r = as_solve(f)
        assert r.sat, str(u)
        assert artin_schreier_operator(r.witness) == f
        assert in_prime_field(u - r.witness)


@pytest.mark.parametrize("q", [4, 9])
def test_round_trip_random_height5(q):
    F = standard_field(q)
    rng = random.Random(q)
    for _ in range(150):
        u = random_ratfunc(F, rng, 5)
        r = as_solve(artin_schreier_operator(u))
        assert r.sat and in_prime_field(u - r.witness)


def test_finite_place_poles():
    F = F3
    u = rf("(t+2)/(t^2+1)^2 + 1/(t+1)", F)
    r = as_solve(artin_schreier_operator(u))
    assert r.sat and in_prime_field(u - r.witness)
    r = as_solve(rf("1/(t^2+1)", F))
    assert not r.sat and r.reason.kind == "pole-order"


def test_completeness_against_bounded_search():
    # oracle: the formula evaluator's exhaustive witness search at height <= 8
    wrapped = parse("E u . x = u^3 + 2*u")
    for x in enumerate_by_height(F3, 2):
        r = as_solve(x)
        out = evaluate(wrapped, {"x": x}, F3, 8)
        assert isinstance(out, Sat) == r.sat, str(x)
        if r.sat:
            assert in_prime_field(out.witness["u"] - r.witness)
