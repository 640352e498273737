"""Exact arithmetic in F_q, F_q[t] and F_q(t).

Run: python demos/01_fields_and_places.py
"""
# %% Fields are described by a prime and, for extensions, a monic irreducible modulus.
from dioph import Place, make_field, parse_field, parse_ratfunc, partial_fractions, valuation
from dioph.ratfunc import absolute_value, enumerate_by_height

F3 = make_field(3)
F4 = parse_field("GF(4;w^2+w+1)")
print("fields:", F3, F4, "  q =", F3.q, F4.q)
w = F4.gen()
print("in F_4: w^2 =", w * w, ", w^3 =", w ** 3)

# %% Rational functions are stored reduced with a monic denominator.
x = parse_ratfunc("(2*t^2+2*t)/(2*t)", F3)
print("(2t^2+2t)/(2t) reduces to", x)

# %% Valuations at the zero place, the infinite place and finite places.
y = parse_ratfunc("t^2/(t+1)", F3)
print("v_0(t^2/(t+1)) =", valuation(y, Place.zero()))
z = parse_ratfunc("t^9-t^3", F3)
print("v_inf(t^9-t^3) =", valuation(z, Place.infinity()), " |.|_inf =", absolute_value(z, Place.infinity()))
print("v_(t+1)(t^2/(t+1)) =", valuation(y, Place.finite(parse_ratfunc("t+1", F3).num)))

# %% Partial fractions split a function into a polynomial part and local pieces.
poly, parts = partial_fractions(parse_ratfunc("1/(t^2*(t+1))", F3))
print("1/(t^2(t+1)) =", poly, "+", " + ".join(f"({a})/({q})^{j}" for q, j, a in parts))

# %% Height-bounded enumeration drives every brute-force oracle in the package.
F2 = make_field(2)
print("height <= 1 over F_2:", [str(e) for e in enumerate_by_height(F2, 1)])
