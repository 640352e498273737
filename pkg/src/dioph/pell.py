"""Denef's Pell model of Z>=0 over Z[t].

With discriminant t^2 - 1, the powers (t + sqrt(t^2-1))^n = x_n + y_n sqrt(t^2-1)
solve X^2 - (t^2-1) Y^2 = 1, index addition is unit multiplication, and
multiplication of indices is detected by

    n = r*s   iff   (t - 1) | y_n - y_r * y_s

because y_n(1) = n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class IntPoly:
    """Dense polynomial in t over the integers, coefficients lowest first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def t(cls):
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else float("-inf")

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-v for v in self.c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(v * other for v in self.c)
        if not self.c or not other.c:
            return IntPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for v in reversed(self.c):
            acc = acc * x + v
        return acc

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in range(len(self.c) - 1, -1, -1):
            v = self.c[e]
            if not v:
                continue
            mono = "" if e == 0 else "t" if e == 1 else f"t^{e}"
            mag = abs(v)
            body = str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f"{sign}{body}"
        return text

    def __repr__(self):
        return f"IntPoly({self})"


DELTA = IntPoly((-1, 0, 1))  # t^2 - 1
_T = IntPoly.t()


@dataclass(frozen=True)
class PellSolution:
    n: int
    x: IntPoly
    y: IntPoly


@lru_cache(maxsize=None)
def _power(n: int):
    if n == 0:
        return IntPoly((1,)), IntPoly()
    x, y = _power(n - 1)
    return _T * x + DELTA * y, x + _T * y


def pell_solution(n: int) -> PellSolution:
    """(x_n, y_n) from the unit recurrence starting at (1, 0)."""
    if n < 0:
        raise ValueError("only nonnegative unit powers are modelled")
    for k in range(0, n, 256):  # warm the cache iteratively, not recursively
        _power(k)
    x, y = _power(n)
    return PellSolution(n, x, y)


def pell_verify(x: IntPoly, y: IntPoly) -> bool:
    return x * x - DELTA * y * y == IntPoly((1,))


def divmod_t_minus_1(f: IntPoly):
    """Synthetic division: (h, r) with f = (t - 1) h + r."""
    c = f.c
    if not c:
        return IntPoly(), 0
    h = [0] * (len(c) - 1)
    acc = c[-1]
    for i in range(len(c) - 2, -1, -1):
        h[i] = acc
        acc = c[i] + acc
    return IntPoly(h), acc


def remainder_t_minus_1(f: IntPoly) -> int:
    """The remainder of ``divmod_t_minus_1`` without building the quotient."""
    return sum(f.c)


@lru_cache(maxsize=4096)
def _yy(r: int, s: int) -> IntPoly:
    return pell_solution(r).y * pell_solution(s).y


def denef_mul_rel(r: int, s: int, n: int) -> bool:
    """(t - 1) divides y_n - y_r * y_s."""
    f = pell_solution(n).y - _yy(r, s)
    return remainder_t_minus_1(f) == 0


def denef_witness(r: int, s: int, n: int) -> IntPoly | None:
    """h with y_n - y_r y_s = (t - 1) h, or None."""
    h, rem = divmod_t_minus_1(pell_solution(n).y - _yy(r, s))
    return h if rem == 0 else None


def pell_add(a: PellSolution, b: PellSolution) -> tuple[IntPoly, IntPoly]:
    """Unit multiplication (x_r x_s + D y_r y_s, x_r y_s + x_s y_r)."""
    return a.x * b.x + DELTA * a.y * b.y, a.x * b.y + b.x * a.y
