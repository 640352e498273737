"""Positive-existential formulas of L_t = (+, *, 0, 1, t) over F_q(t).

Grammar::

    formula := disj
    disj    := conj ('|' conj)*
    conj    := unit ('&' unit)*
    unit    := 'E' var '.' formula | '(' formula ')' | term '=' term
    term    := prod ('+' prod)*
    prod    := power ('*' power)*
    power   := primary ('^' k)?            1 <= k <= 64
    primary := natural | 't' | var | '(' term ')'

Integer literals stand for sums of 1 and are reduced mod p when evaluated.
There is no subtraction: write -1 as the literal p-1.

Evaluation is bounded: existential variables range over the elements of
height <= bound, in enumeration order, and a failed search reports
``NoWitnessUpTo(bound)`` rather than falsity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Union

from .errors import (RebindingUnsupported, FormulaSyntaxError, NegationUnsupported,
                     UnboundVariable, UniversalUnsupported)
from .field import FieldDescriptor, FieldElement
from .poly import Polynomial, factor, poly_gcd
from .ratfunc import RatFunc, iter_by_height

MAX_POWER = 64


# -- AST ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class T:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Num:
    """Literal k >= 2, i.e. 1 + ... + 1."""

    value: int


@dataclass(frozen=True)
class Sum:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Prod:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Pow:
    base: "Term"
    k: int


Term = Union[Zero, One, T, Var, Num, Sum, Prod, Pow]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Eq, And, Or, Exists]


# -- lexer ---------------------------------------------------------------------------

_LEX = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.S)
_VAR = re.compile(r"[a-z][a-z0-9_]*\Z")


def _lex(text):
    toks, pos = [], 0
    while True:
        m = _LEX.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1):
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            toks.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            toks.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _FormulaParser:
    def __init__(self, text):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    def peek(self, off=0):
        return self.toks[min(self.i + off, len(self.toks) - 1)]

    def fail(self, expected, cls=FormulaSyntaxError):
        raise cls(self.peek()[2], expected, self.text)

    def is_op(self, op, off=0):
        kind, val, _ = self.peek(off)
        return kind == "op" and val == op

    def take_op(self, op):
        if self.is_op(op):
            self.i += 1
            return True
        return False

    def _reject_unsupported(self):
        kind, val, _ = self.peek()
        if (kind == "op" and val in "~!¬") or (kind == "name" and val in ("not", "NOT")):
            self.fail("positive formula (negation is not supported)", NegationUnsupported)
        if (kind == "name" and val == "A") or (kind == "op" and val == "∀"):
            self.fail("existential formula (universal quantifiers are not supported)",
                      UniversalUnsupported)

    def parse(self):
        f = self.disj()
        if self.peek()[0] != "end":
            self._reject_unsupported()
            self.fail("end of formula")
        return f

    def disj(self):
        f = self.conj()
        while self.take_op("|"):
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unit()
        while self.take_op("&"):
            f = And(f, self.unit())
        return f

    def unit(self):
        self._reject_unsupported()
        kind, val, _ = self.peek()
        if (kind == "name" and val == "E") or (kind == "op" and val == "∃"):
            self.i += 1
            kind, name, _ = self.peek()
            if kind != "name" or not _VAR.match(name) or name == "t":
                self.fail("variable after E")
            self.i += 1
            if not self.take_op("."):
                self.fail("'.' after quantified variable")
            return Exists(name, self.disj())
        if self.is_op("("):
            save = self.i
            try:
                self.i += 1
                f = self.disj()
                if not self.take_op(")"):
                    self.fail("')'")
                if not any(self.is_op(op) for op in "+*^="):
                    return f
            except FormulaSyntaxError as err:
                if isinstance(err, (NegationUnsupported, UniversalUnsupported)):
                    raise
            self.i = save
        left = self.term()
        if not self.take_op("="):
            self._reject_unsupported()
            if self.is_op("-"):
                self.fail("'+', '*' or '=' (no subtraction in L_t; write -1 as p-1)")
            self.fail("'='")
        return Eq(left, self.term())

    def term(self):
        x = self.prod()
        while self.take_op("+"):
            x = Sum(x, self.prod())
        return x

    def prod(self):
        x = self.power()
        while self.take_op("*"):
            x = Prod(x, self.power())
        return x

    def power(self):
        x = self.primary()
        if self.take_op("^"):
            kind, k, _ = self.peek()
            if kind != "int" or not 1 <= k <= MAX_POWER:
                self.fail(f"exponent between 1 and {MAX_POWER}")
            self.i += 1
            x = Pow(x, k)
        return x

    def primary(self):
        kind, val, _ = self.peek()
        if kind == "int":
            self.i += 1
            return Zero() if val == 0 else One() if val == 1 else Num(val)
        if kind == "name":
            if val == "t":
                self.i += 1
                return T()
            if _VAR.match(val) and val not in ("not",):
                self.i += 1
                return Var(val)
            self._reject_unsupported()
            self.fail("variable name [a-z][a-z0-9_]*")
        if self.take_op("("):
            x = self.term()
            if not self.take_op(")"):
                self.fail("')'")
            return x
        self._reject_unsupported()
        self.fail("term")


def parse(text: str) -> Formula:
    return _FormulaParser(text).parse()


def parse_term(text: str) -> Term:
    p = _FormulaParser(text)
    x = p.term()
    if p.peek()[0] != "end":
        p.fail("end of term")
    return x


# -- printing ------------------------------------------------------------------------

def term_text(x: Term, ctx: int = 0) -> str:
    """ctx: 0 top/sum-left, 1 sum-right or product, 2 product-right, 3 power base."""
    if isinstance(x, Zero):
        return "0"
    if isinstance(x, One):
        return "1"
    if isinstance(x, T):
        return "t"
    if isinstance(x, Var):
        return x.name
    if isinstance(x, Num):
        return str(x.value)
    if isinstance(x, Sum):
        s = f"{term_text(x.left, 0)} + {term_text(x.right, 1)}"
        return f"({s})" if ctx >= 1 else s
    if isinstance(x, Prod):
        s = f"{term_text(x.left, 1)}*{term_text(x.right, 2)}"
        return f"({s})" if ctx >= 2 else s
    if isinstance(x, Pow):
        s = f"{term_text(x.base, 3)}^{x.k}"
        return f"({s})" if ctx >= 3 else s
    raise TypeError(f"not a term: {x!r}")


def pretty_print(f: Formula, ctx: int = 0) -> str:
    """ctx: 0 top, 1 disjunct, 2 conjunct; right operands get ctx + 1."""
    if isinstance(f, Eq):
        return f"{term_text(f.left)} = {term_text(f.right)}"
    if isinstance(f, Exists):
        s = f"E {f.var} . {pretty_print(f.body, 0)}"
        return f"({s})" if ctx >= 1 else s
    if isinstance(f, Or):
        s = f"{pretty_print(f.left, 1)} | {pretty_print(f.right, 2)}"
        return f"({s})" if ctx >= 2 else s
    if isinstance(f, And):
        s = f"{pretty_print(f.left, 2)} & {pretty_print(f.right, 3)}"
        return f"({s})" if ctx >= 3 else s
    raise TypeError(f"not a formula: {f!r}")


# -- semantics ---------------------------------------------------------------------

def free_vars(f) -> set[str]:
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, (Zero, One, T, Num)):
        return set()
    if isinstance(f, Pow):
        return free_vars(f.base)
    if isinstance(f, Exists):
        return free_vars(f.body) - {f.var}
    return free_vars(f.left) | free_vars(f.right)


def bound_vars(f: Formula) -> list[str]:
    if isinstance(f, Eq):
        return []
    if isinstance(f, Exists):
        return [f.var] + bound_vars(f.body)
    return bound_vars(f.left) + bound_vars(f.right)


def eval_term(x: Term, env: dict, field: FieldDescriptor) -> RatFunc:
    if isinstance(x, Zero):
        return RatFunc.zero(field)
    if isinstance(x, One):
        return RatFunc.one(field)
    if isinstance(x, T):
        return RatFunc.t(field)
    if isinstance(x, Num):
        return RatFunc.constant(field, x.value)
    if isinstance(x, Var):
        try:
            return env[x.name]
        except KeyError:
            raise UnboundVariable(f"variable {x.name!r} is not bound") from None
    if isinstance(x, Sum):
        return eval_term(x.left, env, field) + eval_term(x.right, env, field)
    if isinstance(x, Prod):
        return eval_term(x.left, env, field) * eval_term(x.right, env, field)
    if isinstance(x, Pow):
        return eval_term(x.base, env, field) ** x.k
    raise TypeError(f"not a term: {x!r}")


def check(f: Formula, env: dict, witness: dict, field: FieldDescriptor) -> bool:
    """Direct evaluation with every existential variable read from ``witness``."""
    if isinstance(f, Eq):
        return eval_term(f.left, env, field) == eval_term(f.right, env, field)
    if isinstance(f, And):
        return check(f.left, env, witness, field) and check(f.right, env, witness, field)
    if isinstance(f, Or):
        return check(f.left, env, witness, field) or check(f.right, env, witness, field)
    if isinstance(f, Exists):
        if f.var not in witness:
            return False
        return check(f.body, {**env, f.var: witness[f.var]}, witness, field)
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class Sat:
    witness: dict


@dataclass(frozen=True)
class NoWitnessUpTo:
    bound: int


EvalOutcome = Union[Sat, NoWitnessUpTo]


def evaluate(f: Formula, env: dict, field: FieldDescriptor, height_bound: int,
             strategy: str = "pruned") -> EvalOutcome:
    """Bounded search for witnesses of the existential variables of f.

    ``strategy='naive'`` walks every candidate of height <= bound.  The default
    ``'pruned'`` skips candidates that cannot satisfy a conjunct which is a
    univariate polynomial equation in the variable being searched: by the
    rational root theorem over F_q[t] any root N/D has N | (lowest nonzero
    coefficient) and D | (leading coefficient).  Both strategies return the
    same first witness in enumeration order.
    """
    missing = free_vars(f) - set(env)
    if missing:
        raise UnboundVariable(f"unbound free variables: {sorted(missing)}")
    bvs = bound_vars(f)
    if len(set(bvs)) != len(bvs) or set(bvs) & set(env):
        raise RebindingUnsupported("each quantified variable must be fresh and bound once")
    if strategy not in ("pruned", "naive"):
        raise ValueError(f"unknown strategy {strategy!r}")
    search = _Search(field, height_bound, strategy == "pruned")
    w = search.run(f, dict(env))
    return NoWitnessUpTo(height_bound) if w is None else Sat(w)


class _Search:
    def __init__(self, field, bound, pruned):
        self.field = field
        self.bound = bound
        self.pruned = pruned

    def run(self, f, env):
        if isinstance(f, Eq):
            ok = eval_term(f.left, env, self.field) == eval_term(f.right, env, self.field)
            return {} if ok else None
        if isinstance(f, And):
            a = self.run(f.left, env)
            if a is None:
                return None
            b = self.run(f.right, env)
            return None if b is None else {**a, **b}
        if isinstance(f, Or):
            a = self.run(f.left, env)
            return a if a is not None else self.run(f.right, env)
        if isinstance(f, Exists):
            for cand in self.candidates(f.var, f.body, env):
                env[f.var] = cand
                w = self.run(f.body, env)
                if w is not None:
                    del env[f.var]
                    return {f.var: cand, **w}
            env.pop(f.var, None)
            return None
        raise TypeError(f"not a formula: {f!r}")

    def candidates(self, x, body, env):
        if self.pruned:
            for atom in _necessary_atoms(body, x):
                cands = self._roots(atom, x, env)
                if cands is not None:
                    return cands
        return iter_by_height(self.field, self.bound)

    def _roots(self, atom, x, env):
        """Sorted candidate roots in x, or None if the atom gives no constraint."""
        lhs = _univariate(atom.left, x, env, self.field)
        rhs = _univariate(atom.right, x, env, self.field) if lhs is not None else None
        if rhs is None:
            return None
        coeffs = dict(lhs)
        for d, c in rhs.items():
            coeffs[d] = coeffs.get(d, RatFunc.zero(self.field)) - c
        coeffs = {d: c for d, c in coeffs.items() if c}
        if not coeffs:
            return None
        if max(coeffs) == 0:
            return []
        return _rational_roots(coeffs, self.field, self.bound)


def _necessary_atoms(f, x):
    if isinstance(f, Eq):
        return [f]
    if isinstance(f, And):
        return _necessary_atoms(f.left, x) + _necessary_atoms(f.right, x)
    if isinstance(f, Exists) and f.var != x:
        return _necessary_atoms(f.body, x)
    return []


def _univariate(term, x, env, field):
    """term as {degree in x: coefficient}, or None if another variable is free."""
    if isinstance(term, Var):
        if term.name == x:
            return {1: RatFunc.one(field)}
        if term.name in env:
            return {0: env[term.name]}
        return None
    if isinstance(term, (Zero, One, T, Num)):
        return {0: eval_term(term, env, field)}
    if isinstance(term, Sum):
        a = _univariate(term.left, x, env, field)
        b = _univariate(term.right, x, env, field) if a is not None else None
        if b is None:
            return None
        out = dict(a)
        for d, c in b.items():
            out[d] = out[d] + c if d in out else c
        return out
    if isinstance(term, (Prod, Pow)):
        if isinstance(term, Prod):
            a = _univariate(term.left, x, env, field)
            b = _univariate(term.right, x, env, field) if a is not None else None
            if b is None:
                return None
            return _poly_mul(a, b)
        a = _univariate(term.base, x, env, field)
        if a is None:
            return None
        out = {0: RatFunc.one(field)}
        for _ in range(term.k):
            out = _poly_mul(out, a)
        return out
    raise TypeError(f"not a term: {term!r}")


def _poly_mul(a, b):
    out = {}
    for i, ci in a.items():
        for j, cj in b.items():
            v = ci * cj
            out[i + j] = out[i + j] + v if i + j in out else v
    return out


def _monic_divisors(f: Polynomial, max_deg: int):
    F = f.field
    divs = [Polynomial.one(F)]
    for g, m in factor(f):
        nxt = []
        for d in divs:
            cur = d
            for _ in range(m + 1):
                if cur.degree > max_deg:
                    break
                nxt.append(cur)
                cur = cur * g
        divs = nxt
    return divs


def _rational_roots(coeffs, field, bound):
    lcm = Polynomial.one(field)
    for c in coeffs.values():
        lcm = (lcm * c.den).exact_div(poly_gcd(lcm, c.den))
    polys = {d: (c * RatFunc.from_poly(lcm)).num for d, c in coeffs.items()}
    low, high = min(polys), max(polys)
    cands = set()
    if low > 0:
        cands.add(RatFunc.zero(field))
    if high > low:
        nums = _monic_divisors(polys[low], bound)
        dens = _monic_divisors(polys[high], bound)
        units = [FieldElement(field, c) for c in range(1, field.q)]
        for n, d in _cartesian(nums, dens):
            if not poly_gcd(n, d).is_one():
                continue
            for c in units:
                cands.add(RatFunc._raw(n * c, d))
    return sorted((c for c in cands if c.height <= bound), key=RatFunc.order_key)
