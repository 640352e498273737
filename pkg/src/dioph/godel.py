"""A recursive bijection theta: F_q[t] -> Z>=0.

theta(sum a_i t^i) = sum code(a_i) * q^i, where code(a) reads the coordinates
of a in the basis (1, w, ..., w^(n-1)) as base-p digits, least significant
first.  Addition and multiplication of codes are computed by decoding,
operating, and re-encoding, which makes their graphs recursive.
"""

from __future__ import annotations

from .field import FieldDescriptor
from .poly import Polynomial


def encode(f: Polynomial) -> int:
    q = f.field.q
    return sum(c * q ** e for e, c in f._t.items())


def decode(n: int, field: FieldDescriptor) -> Polynomial:
    if n < 0:
        raise ValueError("codes are natural numbers")
    q = field.q
    t = {}
    e = 0
    while n:
        n, c = divmod(n, q)
        if c:
            t[e] = c
        e += 1
    return Polynomial._raw(field, t)


def code_add(m: int, n: int, field: FieldDescriptor) -> int:
    return encode(decode(m, field) + decode(n, field))


def code_mul(m: int, n: int, field: FieldDescriptor) -> int:
    return encode(decode(m, field) * decode(n, field))
