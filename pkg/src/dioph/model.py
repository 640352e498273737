"""The model (D_p, +~, *~, t, t^p) of (Z>=0, +, *, 0, 1) inside F_q(t).

Natural numbers are stored in valuation classes [k] = {x : v_0(x) = k} and
switched onto D_p through E = {([k], [p^k])}: t^(p^a) +~ t^(p^b) is the
element z in D_p whose class partner z1 satisfies [z1] = [x1 * y1], where x1,
y1 are the partners of the arguments.  The relations are checked
semantically on valuations, not as diophantine formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import FieldMismatch, NegativeValuation, ZeroInput
from .field import FieldDescriptor
from .pheidas import DEFAULT_EXP_CAP, DpElement, dp_element
from .poly import Polynomial
from .ratfunc import Place, RatFunc, valuation

_ZERO = Place.zero()


def div_p(a: int, b: int, p: int) -> bool:
    """a |_p b, i.e. a = b * p^n for some n >= 0."""
    if b == 0:
        return a == 0
    if a == 0 or a % b:
        return False
    q = a // b
    while q % p == 0:
        q //= p
    return q == 1


def _nonzero(*xs):
    for x in xs:
        if not x:
            raise ZeroInput("valuation classes are defined for nonzero elements")


def val_eq(w1: RatFunc, w2: RatFunc) -> bool:
    """[w1] = [w2], via v(w1/w2) >= 0 and v(w2/w1) >= 0."""
    _nonzero(w1, w2)
    two_sided = valuation(w1 / w2, _ZERO) >= 0 and valuation(w2 / w1, _ZERO) >= 0
    assert two_sided == (valuation(w1, _ZERO) == valuation(w2, _ZERO))
    return two_sided


def val_add_rel(x: RatFunc, y: RatFunc, z: RatFunc) -> bool:
    """[v(x)] = [v(y) + v(z)]."""
    _nonzero(x, y, z)
    return val_eq(x, y * z)


def val_mul_rel(x: RatFunc, y: RatFunc, z: RatFunc) -> bool:
    """[v(x)] = [v(y) * v(z)]."""
    _nonzero(x, y, z)
    return valuation(x, _ZERO) == valuation(y, _ZERO) * valuation(z, _ZERO)


def switch_E(x: RatFunc, y: RatFunc) -> bool:
    """([v(x)], [v(y)]) in E, i.e. v(y) = p^v(x)."""
    _nonzero(x, y)
    k, m = valuation(x, _ZERO), valuation(y, _ZERO)
    if k < 0 or m < 0:
        raise NegativeValuation("E relates classes [k] with k >= 0 only")
    p = x.field.p
    if k > m.bit_length():
        return False
    return m == p ** k


def _same_field(x: DpElement, y: DpElement):
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")


def model_add(x: DpElement, y: DpElement) -> DpElement:
    _same_field(x, y)
    return DpElement(x.s + y.s, x.field)


def model_mul(x: DpElement, y: DpElement) -> DpElement:
    _same_field(x, y)
    return DpElement(x.s * y.s, x.field)


def class_representatives(k: int, field: FieldDescriptor) -> list[RatFunc]:
    """Two members of [k]: t^k and t^k (1 + t)."""
    tk = RatFunc.from_poly(Polynomial.monomial(field, k))
    return [tk, tk * (RatFunc.t(field) + 1)]


def relation_holds(op: str, x: DpElement, y: DpElement, z: DpElement,
                   exp_cap: int = DEFAULT_EXP_CAP) -> bool:
    """Semantic check of z = x op~ y through explicit class representatives.

    Every pair of representatives (partners x1, y1, z1 and the D_p elements
    themselves, each also perturbed by a unit at t = 0) must satisfy the
    switching relation and [op(x1, y1)] = [z1].
    """
    F = x.field
    X, Y, Z = (e.to_ratfunc(exp_cap) for e in (x, y, z))
    unit = RatFunc.t(F) + 1
    for x1, y1, z1 in zip(class_representatives(x.s, F), class_representatives(y.s, F),
                          class_representatives(z.s, F)):
        for big in (X, X * unit):
            if not switch_E(x1, big):
                return False
        if not (switch_E(y1, Y) and switch_E(z1, Z) and switch_E(z1, Z * unit)):
            return False
        if op == "add":
            if not val_add_rel(z1, x1, y1):
                return False
        elif op == "mul":
            if not val_mul_rel(z1, x1, y1):
                return False
        else:
            raise ValueError(f"unknown operation {op!r}")
    return True


@dataclass
class Check:
    name: str
    args: tuple
    passed: bool


@dataclass
class ModelReport:
    field: FieldDescriptor
    a_max: int
    checks: list[Check] = dc_field(default_factory=list)
    semantic_skipped: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def count(self, prefix: str = "") -> int:
        return sum(1 for c in self.checks if c.name.startswith(prefix))


def verify_model(field: FieldDescriptor, a_max: int,
                 exp_cap: int = DEFAULT_EXP_CAP) -> ModelReport:
    """Check that n ↦ t^(p^n) carries (Z>=0, +, *, 0, 1) onto (D_p, +~, *~, t, t^p).

    Transport and semiring identities are checked symbolically for all
    arguments <= a_max; the valuation-level relations are checked wherever
    every element involved fits under ``exp_cap``.
    """
    rep = lambda n: dp_element(n, field)  # noqa: E731
    report = ModelReport(field, a_max)
    add = report.checks.append
    zero, one = rep(0), rep(1)
    rng = range(a_max + 1)
    for a in rng:
        add(Check("identity.add-zero", (a,), model_add(zero, rep(a)) == rep(a)))
        add(Check("identity.mul-one", (a,), model_mul(one, rep(a)) == rep(a)))
        add(Check("identity.mul-zero", (a,), model_mul(zero, rep(a)) == zero))
    for a in rng:
        for b in rng:
            add(Check("transport.add", (a, b), model_add(rep(a), rep(b)) == rep(a + b)))
            add(Check("transport.mul", (a, b), model_mul(rep(a), rep(b)) == rep(a * b)))
            add(Check("commutative.add", (a, b),
                      model_add(rep(a), rep(b)) == model_add(rep(b), rep(a))))
            add(Check("commutative.mul", (a, b),
                      model_mul(rep(a), rep(b)) == model_mul(rep(b), rep(a))))
            for op, res in (("add", a + b), ("mul", a * b)):
                elems = (rep(a), rep(b), rep(res))
                if all(e.fits(exp_cap) for e in elems):
                    add(Check(f"relation.{op}", (a, b), relation_holds(op, *elems, exp_cap)))
                else:
                    report.semantic_skipped += 1
    for a in rng:
        for b in rng:
            for c in rng:
                x, y, z = rep(a), rep(b), rep(c)
                add(Check("associative.add", (a, b, c),
                          model_add(model_add(x, y), z) == model_add(x, model_add(y, z))))
                add(Check("associative.mul", (a, b, c),
                          model_mul(model_mul(x, y), z) == model_mul(x, model_mul(y, z))))
                add(Check("distributive", (a, b, c),
                          model_mul(x, model_add(y, z))
                          == model_add(model_mul(x, y), model_mul(x, z))))
    return report
