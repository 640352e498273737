"""Solving u^p - u = f over F_q(t), with witnesses or a reason for failure.

Run: python demos/02_artin_schreier.py
"""
# %%
from dioph import artin_schreier_operator, as_solve, as_solve_constant, make_field, parse_ratfunc
from dioph.field import FieldElement, standard_field

F2, F3, F4 = make_field(2), make_field(3), standard_field(4)


def show(text, F):
    r = as_solve(parse_ratfunc(text, F))
    if r.sat:
        print(f"  {F}: u^p-u = {text:<14} solved by u = {r.witness}")
    else:
        detail = {k: str(v) for k, v in vars(r.reason).items()}
        print(f"  {F}: u^p-u = {text:<14} unsolvable, {r.reason.kind} obstruction {detail}")


# %% Polynomial part: the top degree must be divisible by p.
show("t^9-t", F3)
show("t", F3)
# %% Poles: after peeling the leading pole, the remaining pole order must also be divisible by p.
show("1/t^2+1/t", F2)
show("1/t^2", F2)
# %% The constant residue is decided by the field trace.
print("  F_4: w^2 + w = 1, so u^2+u=1 has u =", as_solve_constant(FieldElement(F4, 1)).witness)
print("  F_4: trace(w) = 1, so u^2+u=w fails:", as_solve_constant(F4.gen()).reason.kind)

# %% Round trip: solving the image of any u recovers u up to a constant in F_p.
u = parse_ratfunc("(t^4+2)/(t^2+1)^2 + t^5", F3)
f = artin_schreier_operator(u)
print("\n  u =", u, "\n  f = u^3-u =", f, "\n  solver returns", as_solve(f).witness)
