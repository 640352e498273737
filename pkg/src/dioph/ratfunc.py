"""The rational function field F_q(t): canonical fractions, places, valuations,
partial fractions and height-bounded enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import FieldMismatch, NotIrreducible, ZeroDenominator
from .field import FieldDescriptor, FieldElement
from .godel import decode, encode
from .poly import (Polynomial, factor, inverse_mod, is_irreducible, poly_gcd,
                   valuation_at)

POSITIVE_INFINITY = math.inf


class RatFunc:
    """num/den with gcd 1 and monic den; zero is 0/1.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one(num.field)
        if num.field != den.field:
            raise FieldMismatch(f"{num.field} vs {den.field}")
        n, d = _normalize(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, f: Polynomial):
        return cls._raw(f, Polynomial.one(f.field))

    @classmethod
    def zero(cls, field):
        return cls._raw(Polynomial.zero(field), Polynomial.one(field))

    @classmethod
    def one(cls, field):
        return cls._raw(Polynomial.one(field), Polynomial.one(field))

    @classmethod
    def constant(cls, field, c):
        return cls.from_poly(Polynomial.constant(field, c))

    @classmethod
    def t(cls, field):
        return cls.from_poly(Polynomial.t(field))

    @classmethod
    def monomial(cls, field, e: int, c=1):
        """c * t^e for any integer e."""
        if e >= 0:
            return cls.from_poly(Polynomial.monomial(field, e, c))
        return RatFunc(Polynomial.constant(field, c), Polynomial.monomial(field, -e))

    @property
    def field(self) -> FieldDescriptor:
        return self.num.field

    # -- inspection ----------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    @property
    def height(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Polynomial, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return RatFunc.from_poly(other)
        if isinstance(other, (int, FieldElement)):
            return RatFunc.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if self.den.is_one():
            return RatFunc._raw(self.num * o.den + o.num, o.den)
        if o.den.is_one():
            return RatFunc._raw(self.num + o.num * self.den, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc.zero(self.field)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        return RatFunc._raw(n, d)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDenominator("inverse of zero")
        lc = self.num.lead_code
        il = self.field.inv(lc)
        return RatFunc._raw(self.den.scale(il), self.num.scale(il))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k)

    def frobenius(self):
        """x^p; canonical form is preserved by the Frobenius endomorphism."""
        return RatFunc._raw(self.num.frobenius(), self.den.frobenius())

    def order_key(self):
        """Deterministic enumeration order: height, then theta(num), theta(den)."""
        return (self.height, encode(self.num), encode(self.den))

    # -- text ------------------------------------------------------------------

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n, d = str(self.num), str(self.den)
        if "+" in n or "*" in n:
            n = f"({n})"
        if "+" in d or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self.field}, {self})"


def _normalize(num: Polynomial, den: Polynomial):
    if not den:
        raise ZeroDenominator("zero denominator")
    F = num.field
    if not num:
        return Polynomial.zero(F), Polynomial.one(F)
    g = poly_gcd(num, den)
    if not g.is_one():
        num, den = num.exact_div(g), den.exact_div(g)
    if den.lead_code != 1:
        il = F.inv(den.lead_code)
        num, den = num.scale(il), den.scale(il)
    return num, den


def ratfunc_normalize(num: Polynomial, den: Polynomial) -> RatFunc:
    return RatFunc(num, den)


# -- places ------------------------------------------------------------------------

@dataclass(frozen=True)
class Place:
    """``kind`` is 'zero', 'infinity' or 'finite'; finite places carry their
    monic irreducible polynomial."""

    kind: str
    poly: Polynomial | None = None

    @classmethod
    def zero(cls):
        return cls("zero")

    @classmethod
    def infinity(cls):
        return cls("infinity")

    @classmethod
    def finite(cls, q: Polynomial, check: bool = True):
        if q.degree == 1 and q.is_monomial() and q.is_monic():
            return cls("zero")
        if check and not (q.is_monic() and is_irreducible(q)):
            raise NotIrreducible(f"{q} is not monic irreducible")
        return cls("finite", q)

    def polynomial(self, field) -> Polynomial:
        if self.kind == "zero":
            return Polynomial.t(field)
        if self.kind == "finite":
            return self.poly
        raise ValueError("the infinite place has no polynomial")

    def degree(self) -> int:
        return self.poly.degree if self.kind == "finite" else 1

    def __str__(self):
        if self.kind == "zero":
            return "t"
        if self.kind == "infinity":
            return "1/t"
        return str(self.poly)


def valuation(x: RatFunc, place: Place):
    """Additive order of x at the place; POSITIVE_INFINITY for x = 0."""
    if not x.num:
        return POSITIVE_INFINITY
    if place.kind == "zero":
        return x.num.order_at_zero - x.den.order_at_zero
    if place.kind == "infinity":
        return x.den.degree - x.num.degree
    return valuation_at(x.num, place.poly) - valuation_at(x.den, place.poly)


def absolute_value(x: RatFunc, place: Place) -> Fraction:
    """q^(-deg(place) * order), so |a|_inf = q^deg(a) for polynomials a."""
    v = valuation(x, place)
    if v == POSITIVE_INFINITY:
        return Fraction(0)
    return Fraction(x.field.q) ** (-place.degree() * v)


# -- partial fractions ---------------------------------------------------------------

class PartialFraction(NamedTuple):
    """numerator / place**order with deg numerator < deg place."""

    place: Polynomial
    order: int
    numerator: Polynomial


def local_parts(x: RatFunc):
    """Split x = P + sum_Q A_Q / Q^M_Q.

    Returns (P, [(Q, A_Q, M_Q)]) with deg A_Q < M_Q deg Q and Q ∤ A_Q; places
    sorted by theta code.
    """
    P, R = divmod(x.num, x.den)
    if not R:
        return P, []
    facs = factor(x.den)
    out = []
    if len(facs) == 1:
        Q, M = facs[0]
        out.append((Q, R, M))
        return P, out
    for Q, M in facs:
        QM = Q ** M
        cof = x.den.exact_div(QM)
        A = (R * inverse_mod(cof, QM)) % QM
        out.append((Q, A, M))
    return P, out


def q_adic_digits(A: Polynomial, Q: Polynomial, count: int):
    """[c_0, ..., c_{count-1}] with A = sum c_k Q^k, deg c_k < deg Q."""
    if Q.degree == 1 and Q.is_monomial():
        return _sparse_t_digits(A, count)
    digits = []
    for _ in range(count):
        A, c = divmod(A, Q)
        digits.append(c)
    return digits


def _sparse_t_digits(A, count):
    F = A.field
    digits = [Polynomial.zero(F)] * count
    for e, c in A._t.items():
        if e < count:
            digits[e] = Polynomial._raw(F, {0: c})
    return digits


def partial_fractions(x: RatFunc):
    """(polynomial part, [PartialFraction]) – unique, all numerators nonzero,
    ordered by place theta code then ascending order."""
    P, parts = local_parts(x)
    terms = []
    for Q, A, M in parts:
        if Q.degree == 1 and Q.is_monomial():
            local = [PartialFraction(Q, M - e, Polynomial._raw(Q.field, {0: c}))
                     for e, c in A._t.items()]
            local.sort(key=lambda pf: pf.order)
        else:
            digits = q_adic_digits(A, Q, M)
            local = [PartialFraction(Q, M - k, c) for k, c in enumerate(digits) if c]
            local.reverse()
        terms.extend(local)
    return P, terms


def recompose(poly_part: Polynomial, terms) -> RatFunc:
    x = RatFunc.from_poly(poly_part)
    for Q, j, a in terms:
        x = x + RatFunc(a, Q ** j)
    return x


# -- enumeration --------------------------------------------------------------------

def _monic_of_degree(field, d):
    q = field.q
    base = q ** d
    for low in range(base):
        yield decode(base + low, field)


def iter_by_height(field: FieldDescriptor, h: int) -> Iterator[RatFunc]:
    """All canonical elements of height <= h, by height then theta(num), theta(den)."""
    q = field.q
    one = Polynomial.one(field)
    for k in range(h + 1):
        dens_upto = [one] + [d for j in range(1, k + 1) for d in _monic_of_degree(field, j)]
        dens_exact = [d for d in dens_upto if max(d.degree, 0) == k]
        for code in range(q ** (k + 1)):
            num = decode(code, field)
            if not num:
                if k == 0:
                    yield RatFunc.zero(field)
                continue
            dn = max(num.degree, 0)
            for den in (dens_upto if dn == k else dens_exact):
                if poly_gcd(num, den).is_one():
                    yield RatFunc._raw(num, den)


def enumerate_by_height(field: FieldDescriptor, h: int) -> list[RatFunc]:
    return list(iter_by_height(field, h))
