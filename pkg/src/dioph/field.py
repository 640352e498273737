"""Finite fields F_q = F_p[w]/(modulus).

Elements are handled internally as integer *codes*: the coordinates
(c_0, ..., c_{n-1}) in the basis (1, w, ..., w^(n-1)) read as base-p digits,
least significant first.  ``FieldElement`` is the public wrapper; polynomial
code works on raw codes for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import FieldMismatch, ModulusNotMonic, NonPrime, ReducibleModulus

# Standard irreducible moduli, coefficients lowest degree first.
GF4_MODULUS = (1, 1, 1)  # w^2 + w + 1
GF8_MODULUS = (1, 1, 0, 1)  # w^3 + w + 1
GF9_MODULUS = (1, 0, 1)  # w^2 + 1
GF16_MODULUS = (1, 1, 0, 0, 1)  # w^4 + w + 1
GF25_MODULUS = (2, 1, 1)  # w^2 + w + 2
GF27_MODULUS = (1, 2, 0, 1)  # w^3 + 2w + 1

STANDARD_MODULI = {
    4: GF4_MODULUS,
    8: GF8_MODULUS,
    9: GF9_MODULUS,
    16: GF16_MODULUS,
    25: GF25_MODULUS,
    27: GF27_MODULUS,
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense coefficient-list helpers over F_p (used only to set up tables) ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_fp(a, m, p):
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _is_irreducible_fp(m, p):
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    n = len(m) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _mod_fp(m, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """F_q with q = p^n; ``modulus`` is None exactly for prime fields."""

    p: int
    modulus: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return 1 if self.modulus is None else len(self.modulus) - 1

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is None

    def __str__(self):
        if self.modulus is None:
            return f"GF({self.p})"
        return f"GF({self.q};{_wpoly_text(self.modulus)})"

    def __repr__(self):
        return f"FieldDescriptor({self})"

    # -- code <-> coordinates ----------------------------------------------

    def coords(self, a: int) -> list[int]:
        p, out = self.p, []
        for _ in range(self.n):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_coords(self, cs) -> int:
        a = 0
        for c in reversed(list(cs)):
            a = a * self.p + c % self.p
        return a

    def elements(self):
        return range(self.q)

    def element(self, value) -> FieldElement:
        """Coerce an int (image of Z) or a FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} vs {self}")
            return value
        return FieldElement(self, value % self.p)

    def gen(self) -> FieldElement:
        """The class of w in F_p[w]/(modulus)."""
        if self.n == 1:
            raise ValueError("prime field has no adjoined generator")
        return FieldElement(self, self.p)

    # -- tables ----------------------------------------------------------

    @cached_property
    def _tables(self):
        p, q, m = self.p, self.q, self.modulus

        def vec_mul(a, b):
            ca, cb = self.coords(a), self.coords(b)
            prod_ = [0] * (2 * self.n - 1)
            for i, x in enumerate(ca):
                if x:
                    for j, y in enumerate(cb):
                        prod_[i + j] = (prod_[i + j] + x * y) % p
            return self.from_coords(_mod_fp(prod_, m, p))

        order = q - 1
        factors = _prime_factors(order)
        exp = None
        for g in range(2, q):
            seq = [1]
            for _ in range(order - 1):
                seq.append(vec_mul(seq[-1], g))
            # g generates iff no proper power hits 1 early
            if all(seq[order // f] != 1 for f in factors if order // f < order):
                exp = seq
                break
        if exp is None:  # q == 2 cannot reach here; q == 3.. prime handled elsewhere
            raise AssertionError("no primitive element found")
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        add = None
        if p != 2 and q <= 1024:
            add = [[self.from_coords(
                [(x + y) % p for x, y in zip(self.coords(a), self.coords(b))])
                for b in range(q)] for a in range(q)]
        return exp, log, add

    # -- arithmetic on codes ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.modulus is None:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        add = self._tables[2]
        if add is not None:
            return add[a][b]
        return self.from_coords(
            [(x + y) for x, y in zip(self.coords(a), self.coords(b))])

    def neg(self, a: int) -> int:
        if self.modulus is None:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_coords([-x for x in self.coords(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.modulus is None:
            return a * b % self.p
        if not a or not b:
            return 0
        exp, log, _ = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.modulus is None:
            return pow(a, -1, self.p)
        exp, log, _ = self._tables
        return exp[-log[a] % (self.q - 1)]

    def power(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if not a:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self.modulus is None:
            return pow(a, e % (self.p - 1), self.p)
        exp, log, _ = self._tables
        return exp[log[a] * e % (self.q - 1)]

    def frob(self, a: int) -> int:
        """a ↦ a^p."""
        return self.power(a, self.p)

    def frob_root(self, a: int) -> int:
        """The unique b with b^p = a, namely a^(q/p)."""
        return self.power(a, self.q // self.p)

    def element_text(self, a: int) -> str:
        if self.modulus is None:
            return str(a)
        return _wpoly_text(self.coords(a))


def _wpoly_text(cs) -> str:
    parts = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = "w" if i == 1 else f"w^{i}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts) if parts else "0"


def make_field(p: int, modulus=None) -> FieldDescriptor:
    """Validate and build F_q.

    ``modulus`` may be a polynomial over F_p (anything exposing
    ``coefficients()``) or a sequence of ints, lowest degree first.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if modulus is None:
        return FieldDescriptor(p)
    if hasattr(modulus, "coefficients"):
        coeffs = list(modulus.coefficients())
    else:
        coeffs = [int(c) % p for c in modulus]
    _trim(coeffs)
    if len(coeffs) < 2:
        raise ReducibleModulus("modulus must have degree >= 1")
    if coeffs[-1] != 1:
        raise ModulusNotMonic(f"leading coefficient {coeffs[-1]} != 1")
    if len(coeffs) == 2:
        return FieldDescriptor(p)
    if not _is_irreducible_fp(coeffs, p):
        raise ReducibleModulus(f"{_wpoly_text(coeffs)} is reducible over F_{p}")
    return FieldDescriptor(p, tuple(coeffs))


def standard_field(q: int) -> FieldDescriptor:
    """F_q for prime q or one of the documented standard moduli."""
    if is_prime(q):
        return make_field(q)
    if q not in STANDARD_MODULI:
        raise NonPrime(f"no standard modulus shipped for q={q}")
    p = _prime_factors(q)[0]
    return make_field(p, STANDARD_MODULI[q])


@dataclass(frozen=True)
class FieldElement:
    field: FieldDescriptor
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise ValueError(f"code {self.code} out of range for {self.field}")

    @property
    def coordinates(self) -> tuple[int, ...]:
        return tuple(self.field.coords(self.code))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(b)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.code, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.field.element_text(self.code)


def frobenius_root(c: FieldElement) -> FieldElement:
    """The unique b in F_q with b^p = c."""
    return FieldElement(c.field, c.field.frob_root(c.code))
