"""Selecting a discrete subset from a dense listable set of rationals.

Points with value in some interval [1/(2j+1), 1/(2j)], j >= 1, are kept.
The intervals are pairwise disjoint and accumulate only at 0, so the kept
values fall into one cluster per occupied interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .errors import NonpositiveEpsilon


@dataclass(frozen=True)
class IndexedPoint:
    n: int
    value: Fraction


def interval(j: int) -> tuple[Fraction, Fraction]:
    return Fraction(1, 2 * j + 1), Fraction(1, 2 * j)


def interval_index(r: Fraction) -> int | None:
    """The j >= 1 with 1/(2j+1) <= r <= 1/(2j), or None."""
    r = Fraction(r)
    if r <= 0 or r > Fraction(1, 2):
        return None
    # r <= 1/(2j) forces j <= 1/(2r); only the largest such j can also meet the lower end
    j = (r.denominator // (2 * r.numerator))
    if j >= 1 and r >= Fraction(1, 2 * j + 1):
        return j
    return None


def discretize(points: Iterable[IndexedPoint]):
    """(ztilde, dtilde): indices and points whose value lies in some interval."""
    dtilde = [pt for pt in points if interval_index(pt.value) is not None]
    return [pt.n for pt in dtilde], dtilde


def cluster_count(values: Iterable[Fraction], eps: Fraction) -> int:
    """Number of maximal runs of the sorted values with consecutive gaps <= eps."""
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveEpsilon(f"eps must be positive, got {eps}")
    vs = sorted(Fraction(v) for v in values)
    if not vs:
        return 0
    return 1 + sum(1 for a, b in zip(vs, vs[1:]) if b - a > eps)


def rationals_by_height() -> Iterator[Fraction]:
    """Nonnegative reduced a/b by max(a, b), then a, then b."""
    yield Fraction(0)
    h = 1
    while True:
        pairs = [(a, h) for a in range(0, h + 1)] + [(h, b) for b in range(1, h)]
        for a, b in sorted(set(pairs)):
            if b >= 1 and gcd(a, b) == 1 and a != 0:
                yield Fraction(a, b)
        h += 1


def squares_sequence(count: int) -> list[IndexedPoint]:
    """The first ``count`` rational squares r^2, r enumerated by height."""
    out = []
    for n, r in zip(range(count), rationals_by_height()):
        out.append(IndexedPoint(n, r * r))
    return out


def affine_normalize(values: Iterable[Fraction], lo: Fraction, hi: Fraction) -> list[Fraction]:
    """Map [lo, hi] onto [0, 1] by x ↦ (x - lo) / (hi - lo)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if hi <= lo:
        raise ValueError("need lo < hi")
    return [(Fraction(v) - lo) / (hi - lo) for v in values]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
