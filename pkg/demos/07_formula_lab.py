"""Positive-existential formulas over F_q(t) and bounded witness search.

Run: python demos/07_formula_lab.py
"""
# %%
from dioph import evaluate, make_field, parse, parse_ratfunc, pretty_print
from dioph.formula import check
from dioph.pheidas import membership_formula_text

F3 = make_field(3)
f = parse("E u . x+2*t=u^3+2*u")
print("canonical form:", pretty_print(f))

# %% The evaluator searches witnesses in height order; -1 is written as p-1.
for text in ("t^3", "t^9", "t^2"):
    out = evaluate(f, {"x": parse_ratfunc(text, F3)}, F3, 4)
    print(f"x = {text:<4} -> {out}")

# %% The full membership system, checked independently of the search.
g = parse(membership_formula_text(3))
print("\n", pretty_print(g))
x = parse_ratfunc("t^9", F3)
out = evaluate(g, {"x": x}, F3, 9)
print("witness:", {k: str(v) for k, v in out.witness.items()},
      " re-verified:", check(g, {"x": x}, out.witness, F3))

# %% Pruned (rational-root) and naive search agree on the first witness.
h = parse("E a . E b . x = a^2 + b^2")
y = parse_ratfunc("t^2+1", F3)
print("\npruned:", evaluate(h, {"x": y}, F3, 1), "\nnaive: ", evaluate(h, {"x": y}, F3, 1, "naive"))
