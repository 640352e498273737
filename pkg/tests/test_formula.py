import itertools
from pathlib import Path

import pytest

from dioph.errors import (FormulaSyntaxError, NegationUnsupported, RebindingUnsupported,
                          UnboundVariable, UniversalUnsupported)
from dioph.field import standard_field
from dioph.formula import (And, Eq, Exists, NoWitnessUpTo, One, Or, Prod, Sat, Sum, T,
                           Var, Zero, bound_vars, check, eval_term, evaluate, free_vars,
                           parse, pretty_print)
from dioph.pheidas import dp_membership, membership_formula_text
from dioph.ratfunc import RatFunc, enumerate_by_height

from conftest import rf

F2, F3 = standard_field(2), standard_field(3)
CORPUS = [line for line in (Path(__file__).parent / "data" / "formula_corpus.txt")
          .read_text().splitlines() if line.strip()]


def test_corpus_size():
    assert len(CORPUS) == 50


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    f = parse(text)
    canon = pretty_print(f)
    assert parse(canon) == f
    assert pretty_print(parse(canon)) == canon


def test_parse_examples():
    f = parse("E u . x + 2*t = u^3 + 2*u")
    assert isinstance(f, Exists) and f.var == "u" and isinstance(f.body, Eq)
    assert parse("x = x") == Eq(Var("x"), Var("x"))
    assert pretty_print(Eq(Var("x"), Var("x"))) == "x = x"
    nested = Exists("u", Exists("v", Eq(Var("u"), Var("v"))))
    assert pretty_print(nested) == "E u . E v . u = v"
    assert parse("0 = 1 + t") == Eq(Zero(), Sum(One(), T()))


def test_canonical_pheidas_text():
    text = membership_formula_text(3)
    assert pretty_print(parse(text)) == text
    assert pretty_print(parse("E u . x+2*t=u^3+2*u")) == "E u . x + 2*t = u^3 + 2*u"


@pytest.mark.parametrize("bad", ["E u", "x =", "x = y &", "(x = y", "x = y)", "E t . t = t",
                                 "x = y^0", "x = y^65", "", "x + y", "E 1 . x = x"])
def test_syntax_errors(bad):
    with pytest.raises(FormulaSyntaxError) as exc:
        parse(bad)
    assert exc.value.position >= 0


def test_negation_and_universal():
    with pytest.raises(NegationUnsupported):
        parse("~ x = y")
    with pytest.raises(NegationUnsupported):
        parse("x != y")
    with pytest.raises(UniversalUnsupported):
        parse("A u . x = u")


def test_free_and_bound():
    f = parse("E u . E v . x + u = v * y")
    assert free_vars(f) == {"x", "y"} and bound_vars(f) == ["u", "v"]


def test_evaluate_examples():
    out = evaluate(parse("E u . t^3 + 2*t = u^3 + 2*u"), {}, F3, 2)
    assert isinstance(out, Sat) and str(out.witness["u"]) == "t"
    out = evaluate(parse("E u . t = u^3 + 2*u"), {}, F3, 4)
    assert out == NoWitnessUpTo(4)
    out = evaluate(parse("x * 1 = x"), {"x": rf("(t+1)/t", F3)}, F3, 0)
    assert out == Sat({})


def test_unbound_and_rebinding():
    with pytest.raises(UnboundVariable):
        evaluate(parse("x = y"), {"x": RatFunc.t(F3)}, F3, 1)
    with pytest.raises(RebindingUnsupported):
        evaluate(parse("E x . x = t"), {"x": RatFunc.t(F3)}, F3, 1)
    with pytest.raises(RebindingUnsupported):
        evaluate(parse("(E u . u = t) & (E u . u = 1)"), {}, F3, 1)


def test_integer_literals_reduce_mod_p():
    assert eval_term(parse("x = 4").right, {}, F3) == RatFunc.one(F3)
    assert check(parse("x + 2 = 0"), {"x": RatFunc.one(F3)}, {}, F3)


SEARCH_FORMULAS = [
    "E u . x = u^2",
    "E u . E v . x = u * v & u + v = t",
    "E u . x * u = 1 | x = 0",
    "E u . u^3 + 2*u = x",
    "E a . E b . x = a^2 + b^2",
    "E u . (x = u | t = u * x)",
]


@pytest.mark.parametrize("text", SEARCH_FORMULAS)
def test_pruned_matches_naive(text):
    f = parse(text)
    for x in enumerate_by_height(F3, 1):
        a = evaluate(f, {"x": x}, F3, 1, "pruned")
        b = evaluate(f, {"x": x}, F3, 1, "naive")
        assert a == b, (text, str(x))
        if isinstance(a, Sat):
            assert check(f, {"x": x}, a.witness, F3)


def test_monotonicity():
    f = parse("E u . E v . x = u * v & u + v = t")
    for x in enumerate_by_height(F2, 1):
        prev = None
        for h in range(3):
            out = evaluate(f, {"x": x}, F2, h)
            if prev is not None:
                if isinstance(prev, Sat):
                    assert out == prev
            prev = out


def test_oracle_agreement_pheidas_f3():
    f = parse(membership_formula_text(3))
    for x in enumerate_by_height(F3, 2):
        if not x:
            continue
        out = evaluate(f, {"x": x}, F3, 9)
        assert isinstance(out, Sat) == (dp_membership(x) is not None), str(x)
        if isinstance(out, Sat):
            assert check(f, {"x": x}, out.witness, F3)


def test_videla_formula_members():
    f = parse(membership_formula_text(2))
    for s in range(1, 4):
        x = rf(f"t^{2 ** s}", F2)
        out = evaluate(f, {"x": x}, F2, 2 ** s)
        assert isinstance(out, Sat) and check(f, {"x": x}, out.witness, F2)
    assert isinstance(evaluate(f, {"x": RatFunc.t(F2)}, F2, 3), NoWitnessUpTo)
