"""Deciding u^p - u = f over F_q(t), with witness extraction.

The solver peels f place by place.  A pole of order M at a place (degree
m > 0 at infinity) is only in the image of the Artin–Schreier operator when
p | M: the top coefficient is matched by the p-th power of b / Q^(M/p) (resp.
b t^(m/p)), subtracted, and the residue recursed on.  What is left at the end
is a constant, solvable iff its trace to F_p vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldElement
from .poly import Polynomial, valuation_at
from .ratfunc import Place, RatFunc, local_parts


@dataclass(frozen=True)
class DegreeObstruction:
    degree: int
    kind = "degree"


@dataclass(frozen=True)
class PoleOrderObstruction:
    place: Place
    order: int
    kind = "pole-order"


@dataclass(frozen=True)
class TraceObstruction:
    c: FieldElement
    kind = "trace"


@dataclass(frozen=True)
class ASResult:
    witness: RatFunc | None = None
    reason: DegreeObstruction | PoleOrderObstruction | TraceObstruction | None = None

    @property
    def sat(self) -> bool:
        return self.witness is not None

    def __bool__(self):
        return self.sat


def artin_schreier_operator(u: RatFunc) -> RatFunc:
    """u ↦ u^p - u."""
    return u.frobenius() - u


def trace_to_prime(c: FieldElement) -> int:
    F = c.field
    acc, x = 0, c.code
    for _ in range(F.n):
        acc = F.add(acc, x)
        x = F.frob(x)
    # the trace lies in F_p, whose codes are the residues themselves
    return acc


def _solve_mod_p(rows, rhs, p):
    """One solution of rows·x = rhs over F_p (free variables 0), or None."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    if any(row[-1] % p for row in m[r:]):
        return None
    x = [0] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][-1]
    return x


def as_solve_constant(c: FieldElement) -> ASResult:
    """Solve u0^p - u0 = c in F_q via the F_p-linear map on coordinates."""
    F = c.field
    n, p = F.n, F.p
    images = [F.coords(F.sub(F.frob(p ** i), p ** i)) for i in range(n)]
    rows = [[images[j][i] for j in range(n)] for i in range(n)]
    x = _solve_mod_p(rows, F.coords(c.code), p)
    if x is None:
        return ASResult(reason=TraceObstruction(c))
    u0 = F.from_coords(x)
    # solutions form u0 + F_p; take the smallest code
    best = min(F.add(u0, k) for k in range(p))
    return ASResult(witness=RatFunc.constant(F, FieldElement(F, best)))


def _residue_frob_root(a: Polynomial, Q: Polynomial) -> Polynomial:
    """b with b^p ≡ a mod Q in the field F_q[t]/(Q)."""
    F = a.field
    if Q.degree == 1:
        return Polynomial.constant(F, FieldElement(F, F.frob_root(a.code_at(0))))
    b = a
    for _ in range(F.n * Q.degree - 1):
        b = b.frobenius() % Q
    return b


def as_solve(f: RatFunc) -> ASResult:
    F = f.field
    p = F.p
    P, parts = local_parts(f)

    # polynomial part: the place at infinity
    u_poly = {}
    while P.degree > 0:
        m = P.degree
        if m % p:
            return ASResult(reason=DegreeObstruction(m))
        b = F.frob_root(P.lead_code)
        k = m // p
        P = P - Polynomial._raw(F, {m: P.lead_code}) + Polynomial._raw(F, {k: b})
        u_poly[k] = b
    c0 = P.code_at(0)
    u = RatFunc.from_poly(Polynomial._raw(F, u_poly))

    for Q, A, M in parts:
        t_place = Q.degree == 1 and Q.is_monomial()
        peeled = []
        while A:
            if M % p:
                return ASResult(reason=PoleOrderObstruction(Place.finite(Q, check=False), M))
            b = _residue_frob_root(A % Q, Q)
            k = M // p
            A = A - b.frobenius() + b * Q ** (M - k)
            peeled.append((b, k))
            if not A:
                break
            v = A.order_at_zero if t_place else valuation_at(A, Q)
            A = A.shift(-v) if t_place else A.exact_div(Q ** v)
            M -= v
        top = peeled[0][1]
        num = Polynomial.zero(F)
        for b, k in peeled:
            num = num + b * Q ** (top - k)
        u = u + RatFunc._raw(num, Q ** top)

    base = as_solve_constant(FieldElement(F, c0))
    if not base.sat:
        return base
    return ASResult(witness=u + base.witness)
