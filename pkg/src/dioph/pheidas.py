"""Membership in D_p = {t^(p^s) : s >= 0} via the Pheidas and Videla curves.

For p > 2, x is in D_p iff both
    x - t           = u^p - u
    x^-1 - t^-1     = v^p - v
are solvable in F_q(t).  For p = 2 the system is
    x + t = u^2 + u,        u = w^2 + t,
    x^-1 + t^-1 = v^2 + v,  v = sw^2 + t^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artin_schreier import artin_schreier_operator, as_solve
from .errors import (ExponentCapExceeded, InternalLemmaViolation,
                     WrongCharacteristic, ZeroInput)
from .field import FieldDescriptor
from .poly import Polynomial
from .ratfunc import RatFunc

DEFAULT_EXP_CAP = 2 ** 20


@dataclass(frozen=True)
class DpElement:
    """t^(p^s), held by its exponent index s."""

    s: int
    field: FieldDescriptor

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("D_p is indexed by s >= 0")

    @property
    def exponent(self) -> int:
        return self.field.p ** self.s

    def fits(self, cap: int = DEFAULT_EXP_CAP) -> bool:
        # p^s >= 2^s, so large s is rejected before materialising p^s
        return self.s <= max(cap, 1).bit_length() and self.exponent <= cap

    def to_ratfunc(self, cap: int = DEFAULT_EXP_CAP) -> RatFunc:
        if not self.fits(cap):
            raise ExponentCapExceeded(
                f"t^({self.field.p}^{self.s}) exceeds exponent cap {cap}")
        return RatFunc.from_poly(Polynomial.monomial(self.field, self.exponent))

    def __str__(self):
        if self.s == 0:
            return "t"
        if self.fits():
            return f"t^{self.exponent}"
        return f"t^({self.field.p}^{self.s})"


def dp_element(s: int, field: FieldDescriptor) -> DpElement:
    return DpElement(s, field)


@dataclass(frozen=True)
class DpWitness:
    s: int
    u: RatFunc
    v: RatFunc
    w: RatFunc | None = None
    sw: RatFunc | None = None


def char2_square_test(f: RatFunc) -> RatFunc | None:
    """g with g^2 = f in characteristic 2, or None."""
    if f.field.p != 2:
        raise WrongCharacteristic(f"square test needs characteristic 2, got {f.field.p}")
    num, den = f.num, f.den
    if any(e % 2 for e, _ in num.items()) or any(e % 2 for e, _ in den.items()):
        return None
    return RatFunc._raw(num.pth_root(), den.pth_root())


def _syntactic_index(x: RatFunc):
    """s if x is literally t^(p^s), else None."""
    if not x.is_polynomial() or not x.num.is_monomial() or not x.num.is_monic():
        return None
    e, p, s = x.num.degree, x.field.p, 0
    if e < 1:
        return None
    while e % p == 0:
        e //= p
        s += 1
    return s if e == 1 else None


def _videla_root(rhs: RatFunc, shift: RatFunc):
    """(u, w) with u^2 + u = rhs and u + shift = w^2, trying both roots."""
    base = as_solve(rhs)
    if not base.sat:
        return None
    for u in (base.witness, base.witness + 1):
        w = char2_square_test(u + shift)
        if w is not None:
            return u, w
    return None


def dp_membership(x: RatFunc) -> DpWitness | None:
    """Decide x in D_p from the defining equations; None means not a member.

    The verdict is cross-checked against the syntactic form t^(p^s); a
    disagreement raises InternalLemmaViolation.
    """
    if not x:
        raise ZeroInput("D_p membership needs x != 0")
    F = x.field
    t = RatFunc.t(F)
    inv_t = t.inverse()
    if F.p > 2:
        ru = as_solve(x - t)
        rv = as_solve(x.inverse() - inv_t) if ru.sat else None
        found = (ru.witness, rv.witness) if ru.sat and rv.sat else None
        extra = (None, None)
    else:
        uw = _videla_root(x + t, t)
        vs = _videla_root(x.inverse() + inv_t, inv_t) if uw else None
        found = (uw[0], vs[0]) if uw and vs else None
        extra = (uw[1], vs[1]) if found else (None, None)

    s = _syntactic_index(x)
    if (found is None) != (s is None):
        raise InternalLemmaViolation(
            f"equations say {'member' if found else 'non-member'} but x = {x} "
            f"{'is' if s is not None else 'is not'} of the form t^(p^s) over {F}")
    if found is None:
        return None
    return DpWitness(s, found[0], found[1], *extra)


def dp_residuals(x: RatFunc, wit: DpWitness) -> dict[str, RatFunc]:
    """Left minus right side of every defining equation (all zero when valid)."""
    F = x.field
    t = RatFunc.t(F)
    inv_t = t.inverse()
    res = {
        "x-t=u^p-u": (x - t) - artin_schreier_operator(wit.u),
        "1/x-1/t=v^p-v": (x.inverse() - inv_t) - artin_schreier_operator(wit.v),
    }
    if F.p == 2:
        res["u=w^2+t"] = wit.u - (wit.w ** 2 + t)
        res["v=sw^2+1/t"] = wit.v - (wit.sw ** 2 + inv_t)
    return res


def pheidas_formula_text(p: int) -> str:
    """The V_p system as a positive-existential L_t formula in free variable x.

    -1 is written as the literal p-1; the second equation is multiplied by xt.
    """
    m = p - 1
    return (f"E u . E v . x + {m}*t = u^{p} + {m}*u"
            f" & t + {m}*x = x*t*(v^{p} + {m}*v)")


VIDELA_FORMULA_TEXT = ("E u . E w . E v . E sw . x + t = u^2 + u & u = w^2 + t"
                       " & t + x = x*t*(v^2 + v) & t*v = t*sw^2 + 1")


def membership_formula_text(p: int) -> str:
    return VIDELA_FORMULA_TEXT if p == 2 else pheidas_formula_text(p)
