"""Text grammar for elements of F_q(t) and field specs.

    (t^3+2*t)/(t+1)        over GF(3)
    (w+1)*t^2+w            over GF(4;w^2+w+1)

Integers denote their image in F_p, ``w`` the adjoined generator, ``t`` the
variable.  ``+ - * / ^`` with the usual precedence; exponents are naturals.
"""

from __future__ import annotations

import re

from .errors import TextSyntaxError
from .field import FieldDescriptor, make_field
from .poly import Polynomial
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokens(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        if m.group(1):
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, field, names):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0
        self.field = field
        self.names = names

    def peek(self):
        return self.toks[self.i]

    def fail(self, expected):
        raise TextSyntaxError(f"at position {self.peek()[2]}: expected {expected} in {self.text!r}")

    def take_op(self, op):
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def parse(self):
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail("end of input")
        return v

    def expr(self):
        v = self.term()
        while True:
            if self.take_op("+"):
                v = v + self.term()
            elif self.take_op("-"):
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            if self.take_op("*"):
                v = v * self.unary()
            elif self.take_op("/"):
                v = v / self.unary()
            else:
                return v

    def unary(self):
        if self.take_op("-"):
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.take_op("^"):
            kind, val, _ = self.peek()
            if kind != "int":
                self.fail("natural exponent")
            self.i += 1
            return base ** val
        return base

    def atom(self):
        kind, val, _ = self.peek()
        if kind == "int":
            self.i += 1
            return RatFunc.constant(self.field, val)
        if kind == "name":
            if val not in self.names:
                self.fail(f"one of {sorted(self.names)}")
            self.i += 1
            return self.names[val]
        if self.take_op("("):
            v = self.expr()
            if not self.take_op(")"):
                self.fail("')'")
            return v
        self.fail("integer, variable or '('")


def parse_ratfunc(text: str, field: FieldDescriptor) -> RatFunc:
    names = {"t": RatFunc.t(field)}
    if field.n > 1:
        names["w"] = RatFunc.constant(field, field.gen())
    return _Parser(text, field, names).parse()


def parse_poly(text: str, field: FieldDescriptor) -> Polynomial:
    x = parse_ratfunc(text, field)
    if not x.is_polynomial():
        raise TextSyntaxError(f"{text!r} is not a polynomial")
    return x.num


_FIELD_SPEC = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:;\s*([^)]*))?\)\s*$")


def parse_field(spec: str) -> FieldDescriptor:
    """``GF(p)`` or ``GF(q;modulus-in-w)``."""
    m = _FIELD_SPEC.match(spec)
    if not m:
        raise TextSyntaxError(f"bad field spec {spec!r}; use GF(p) or GF(q;w^2+...)")
    q = int(m.group(1))
    if m.group(2) is None:
        return make_field(q)
    p = _smallest_prime_factor(q)
    prime = make_field(p)
    wpoly = _Parser(m.group(2), prime, {"w": RatFunc.t(prime)}).parse()
    if not wpoly.is_polynomial():
        raise TextSyntaxError(f"modulus {m.group(2)!r} is not a polynomial")
    F = make_field(p, wpoly.num.coefficients())
    if F.q != q:
        raise TextSyntaxError(f"modulus of degree {F.n} gives q={F.q}, not {q}")
    return F


def _smallest_prime_factor(q):
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q
