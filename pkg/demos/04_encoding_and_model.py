"""Coding F_q[t] by naturals and modelling (N, +, *) inside D_p.

Run: python demos/04_encoding_and_model.py
"""
# %% The positional code sends sum a_i t^i to sum code(a_i) q^i.
from dioph import (code_add, code_mul, decode, dp_element, encode, make_field, model_add,
                   model_mul, parse_poly, verify_model)
from dioph.model import relation_holds, switch_E, val_eq
from dioph.textio import parse_ratfunc

F3 = make_field(3)
f = parse_poly("2*t^2+1", F3)
print("theta(2t^2+1) =", encode(f), "  decode(16) =", decode(16, F3))
print("code_mul(4, 4) =", code_mul(4, 4, F3), "i.e. (t+1)^2 =", decode(code_mul(4, 4, F3), F3))
print("code_add(1, 2) =", code_add(1, 2, F3), "since 1 + 2 = 0 in F_3")

# %% Valuation classes: w1 ~ w2 iff v(w1/w2) >= 0 and v(w2/w1) >= 0.
print("\n[t^2] = [t^2+t^3]?", val_eq(parse_ratfunc("t^2", F3), parse_ratfunc("t^2+t^3", F3)))
print("([1], [3]) in E? ", switch_E(parse_ratfunc("t", F3), parse_ratfunc("t^3+t^4", F3)))

# %% n maps to t^(p^n); addition and multiplication move onto D_p.
a, b = dp_element(1, F3), dp_element(2, F3)
s, p = model_add(a, b), model_mul(b, b)
print(f"\n{a} +~ {b} = {s}   relation verified: {relation_holds('add', a, b, s)}")
print(f"{b} *~ {b} = {p}   relation verified: {relation_holds('mul', b, b, p)}")
big = model_mul(dp_element(30, F3), dp_element(40, F3))
print("large exponents stay symbolic:", big)

# %% The transport report checks identities, commutativity, associativity and distributivity.
rep = verify_model(F3, 6)
print(f"\nverify_model(a_max=6): passed={rep.passed}, {len(rep.checks)} checks, "
      f"{rep.count('relation')} semantic")
