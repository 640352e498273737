"""Sparse univariate polynomials over F_q in the variable t.

Coefficients are stored as field codes in a dict ``exponent -> code`` with no
zero entries, so monomials such as t^(3^24) cost one dict slot.  Dense
algorithms (division, gcd, factorization) only ever see moderate degrees.
"""

from __future__ import annotations

import math
import random
from collections.abc import Mapping

from .errors import FieldMismatch, ZeroDenominator
from .field import FieldDescriptor, FieldElement

NEG_INF = -math.inf


def _to_code(field: FieldDescriptor, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldMismatch(f"{c.field} vs {field}")
        return c.code
    return int(c) % field.p


class Polynomial:
    __slots__ = ("field", "_t", "_hash")

    def __init__(self, field: FieldDescriptor, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else enumerate(terms)
            for e, c in items:
                if e < 0:
                    raise ValueError("negative exponent in polynomial")
                code = _to_code(field, c)
                if code:
                    t[int(e)] = code
        self.field = field
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, field, t):
        obj = cls.__new__(cls)
        obj.field = field
        obj._t = t
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls._raw(field, {})

    @classmethod
    def one(cls, field):
        return cls._raw(field, {0: 1})

    @classmethod
    def constant(cls, field, c):
        code = _to_code(field, c)
        return cls._raw(field, {0: code} if code else {})

    @classmethod
    def monomial(cls, field, e: int, c=1):
        code = _to_code(field, c)
        return cls._raw(field, {e: code} if code else {})

    @classmethod
    def t(cls, field):
        return cls._raw(field, {1: 1})

    @classmethod
    def from_codes(cls, field, codes):
        """Dense list of codes, lowest degree first."""
        return cls._raw(field, {i: c for i, c in enumerate(codes) if c})

    # -- inspection ----------------------------------------------------------

    @property
    def degree(self):
        return max(self._t) if self._t else NEG_INF

    @property
    def order_at_zero(self):
        """Exponent of the lowest term; +inf for the zero polynomial."""
        return min(self._t) if self._t else math.inf

    @property
    def lead_code(self) -> int:
        return self._t[self.degree] if self._t else 0

    def leading_coefficient(self) -> FieldElement:
        return FieldElement(self.field, self.lead_code)

    def coeff(self, e) -> FieldElement:
        return FieldElement(self.field, self._t.get(e, 0))

    def code_at(self, e) -> int:
        return self._t.get(e, 0)

    def items(self):
        """(exponent, code) pairs in decreasing exponent order."""
        return sorted(self._t.items(), reverse=True)

    def coefficients(self) -> list[int]:
        """Dense codes, lowest degree first (empty for 0)."""
        if not self._t:
            return []
        out = [0] * (self.degree + 1)
        for e, c in self._t.items():
            out[e] = c
        return out

    def num_terms(self) -> int:
        return len(self._t)

    def is_zero(self):
        return not self._t

    def is_one(self):
        return self._t == {0: 1}

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def is_monomial(self):
        return len(self._t) == 1

    def is_monic(self):
        return self.lead_code == 1

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other % self.field.p} if other % self.field.p else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._t.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        t = dict(self._t)
        for e, c in o._t.items():
            s = F.add(t.get(e, 0), c)
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Polynomial._raw(F, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial._raw(F, {e: F.neg(c) for e, c in self._t.items()})

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
        F = self.field
        if not self._t or not o._t:
            return Polynomial._raw(F, {})
        a, b = self._t, o._t
        if len(a) < len(b):
            a, b = b, a
        t = {}
        if F.modulus is None:
            p = F.p
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    e = e1 + e2
                    t[e] = (t.get(e, 0) + c1 * c2) % p
            t = {e: c for e, c in t.items() if c}
        else:
            add, mul = F.add, F.mul
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    e = e1 + e2
                    t[e] = add(t.get(e, 0), mul(c1, c2))
            t = {e: c for e, c in t.items() if c}
        return Polynomial._raw(F, t)

    __rmul__ = __mul__

    def scale(self, code: int):
        F = self.field
        if not code:
            return Polynomial._raw(F, {})
        return Polynomial._raw(F, {e: F.mul(c, code) for e, c in self._t.items()})

    def shift(self, k: int):
        """Multiply by t^k (k may be negative if every exponent allows it)."""
        return Polynomial._raw(self.field, {e + k: c for e, c in self._t.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        if len(self._t) == 1:
            (e, c), = self._t.items()
            return Polynomial._raw(self.field, {e * k: self.field.power(c, k)})
        result = Polynomial.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self):
        """f^p, computed termwise (characteristic p)."""
        F, p = self.field, self.field.p
        return Polynomial._raw(F, {e * p: F.frob(c) for e, c in self._t.items()})

    def pth_root(self):
        """Inverse of ``frobenius``; requires every exponent divisible by p."""
        F, p = self.field, self.field.p
        t = {}
        for e, c in self._t.items():
            if e % p:
                raise ValueError("polynomial is not a p-th power")
            t[e // p] = F.frob_root(c)
        return Polynomial._raw(F, t)

    def derivative(self):
        F = self.field
        t = {}
        for e, c in self._t.items():
            d = F.mul(c, e % F.p)
            if d and e:
                t[e - 1] = d
        return Polynomial._raw(F, t)

    def monic(self):
        if not self._t:
            return self
        return self.scale(self.field.inv(self.lead_code))

    def evaluate(self, x: int) -> int:
        """Value at the field element with code x."""
        F = self.field
        acc = 0
        for e, c in self._t.items():
            acc = F.add(acc, F.mul(c, F.power(x, e)))
        return acc

    def __divmod__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        F = self.field
        if not g._t:
            raise ZeroDenominator("polynomial division by zero")
        if len(g._t) == 1:
            (k, c), = g._t.items()
            ic = F.inv(c)
            qt, rt = {}, {}
            for e, a in self._t.items():
                if e >= k:
                    qt[e - k] = F.mul(a, ic)
                else:
                    rt[e] = a
            return Polynomial._raw(F, qt), Polynomial._raw(F, rt)
        dg = g.degree
        ilc = F.inv(g.lead_code)
        gitems = [(e, c) for e, c in g._t.items() if e != dg]
        r = dict(self._t)
        qt = {}
        add, mul, neg = F.add, F.mul, F.neg
        while r:
            dr = max(r)
            if dr < dg:
                break
            c = mul(r.pop(dr), ilc)
            s = dr - dg
            qt[s] = c
            nc = neg(c)
            for e, ge in gitems:
                v = add(r.get(e + s, 0), mul(nc, ge))
                if v:
                    r[e + s] = v
                else:
                    r.pop(e + s, None)
        return Polynomial._raw(F, qt), Polynomial._raw(F, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- text ------------------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        F = self.field
        items = self.items()
        single = len(items) == 1
        parts = []
        for e, c in items:
            ctext = F.element_text(c)
            compound = "+" in ctext or "*" in ctext
            if e == 0:
                parts.append(f"({ctext})" if compound and not single else ctext)
                continue
            mono = "t" if e == 1 else f"t^{e}"
            if c == 1:
                parts.append(mono)
            elif compound:
                parts.append(f"({ctext})*{mono}")
            else:
                parts.append(f"{ctext}*{mono}")
        return "+".join(parts)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"


# -- gcd & friends -------------------------------------------------------------

def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    F = a.field
    if a.is_constant() or b.is_constant():
        return Polynomial.one(F)
    if a.is_monomial() or b.is_monomial():
        k = min(a.order_at_zero, b.order_at_zero)
        return Polynomial.monomial(F, k)
    k = min(a.order_at_zero, b.order_at_zero)
    a, b = a.shift(-a.order_at_zero), b.shift(-b.order_at_zero)
    while b:
        a, b = b, a % b
    return a.monic().shift(k) if k else a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial):
    """(g, s, u) with s*a + u*b = g monic."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.one(F), Polynomial.zero(F)
    u0, u1 = Polynomial.zero(F), Polynomial.one(F)
    while r1:
        qq, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qq * s1
        u0, u1 = u1, u0 - qq * u1
    if not r0:
        return r0, s0, u0
    il = F.inv(r0.lead_code)
    return r0.scale(il), s0.scale(il), u0.scale(il)


def inverse_mod(a: Polynomial, m: Polynomial) -> Polynomial:
    g, s, _ = poly_xgcd(a % m, m)
    if not g.is_one():
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    return s % m


def powmod(a: Polynomial, e: int, m: Polynomial) -> Polynomial:
    result = Polynomial.one(a.field) % m
    base = a % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result


def valuation_at(f: Polynomial, q: Polynomial) -> int:
    """Largest k with q^k | f (f nonzero, q non-constant)."""
    if q.degree == 1 and q.is_monomial():
        return f.order_at_zero
    k = 0
    while True:
        qq, r = divmod(f, q)
        if r:
            return k
        f = qq
        k += 1


# -- factorization ---------------------------------------------------------------

def _theta(f: Polynomial) -> int:
    q = f.field.q
    return sum(c * q ** e for e, c in f._t.items())


def squarefree_decomposition(f: Polynomial):
    """[(g, m)] with f = prod g^m, each g squarefree monic; f monic, t ∤ f not needed."""
    F = f.field
    one = Polynomial.one(F)
    out = []
    c = poly_gcd(f, f.derivative())
    w = f.exact_div(c)
    i = 1
    while not w.is_one():
        y = poly_gcd(w, c)
        fac = w.exact_div(y)
        if not fac.is_one():
            out.append((fac, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c != one:
        for g, m in squarefree_decomposition(c.pth_root()):
            out.append((g, m * F.p))
    return out


def distinct_degree(f: Polynomial):
    """Split a squarefree monic f into (product of degree-d irreducibles, d)."""
    F = f.field
    x = Polynomial.t(F)
    out = []
    i = 1
    rest = f
    h = x % rest
    while rest.degree >= 2 * i:
        h = powmod(h, F.q, rest)
        g = poly_gcd(rest, h - x)
        if not g.is_one():
            out.append((g, i))
            rest = rest.exact_div(g)
            h = h % rest
        i += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree(f: Polynomial, d: int, rng=None):
    """Cantor–Zassenhaus splitting of a product of distinct degree-d irreducibles."""
    if f.degree == d:
        return [f]
    F = f.field
    rng = rng or random.Random(0x5EED)
    n = f.degree
    while True:
        a = Polynomial.from_codes(F, [rng.randrange(F.q) for _ in range(n)])
        if a.degree < 1:
            continue
        if F.p == 2:
            m = F.n * d
            tr = a % f
            acc = tr
            for _ in range(m - 1):
                tr = (tr * tr) % f
                acc = acc + tr
            g = poly_gcd(acc, f)
        else:
            g = poly_gcd(powmod(a, (F.q ** d - 1) // 2, f) - 1, f)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f.exact_div(g), d, rng)


def factor(f: Polynomial):
    """Monic irreducible factorization [(g, m)] sorted by the theta code of g.

    The unit (leading coefficient) is dropped.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    F = f.field
    f = f.monic()
    mult: dict[Polynomial, int] = {}
    k = f.order_at_zero
    if k:
        mult[Polynomial.t(F)] = k
        f = f.shift(-k)
    if f.degree > 0:
        for g, m in squarefree_decomposition(f):
            for h, d in distinct_degree(g):
                for irr in equal_degree(h, d):
                    mult[irr] = mult.get(irr, 0) + m
    return sorted(mult.items(), key=lambda gm: _theta(gm[0]))


def is_irreducible(f: Polynomial) -> bool:
    if f.degree < 1:
        return False
    fs = factor(f)
    return len(fs) == 1 and fs[0][1] == 1
