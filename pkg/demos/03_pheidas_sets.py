"""The sets D_p = {t^(p^s)} cut out by Artin-Schreier equations.

Run: python demos/03_pheidas_sets.py
"""
# %%
from dioph import dp_element, dp_membership, dp_residuals, make_field, parse_ratfunc
from dioph.errors import InternalLemmaViolation
from dioph.ratfunc import enumerate_by_height

F3, F2 = make_field(3), make_field(2)

# %% Members come with witnesses u, v, and all equations hold exactly.
for s in range(4):
    x = dp_element(s, F3).to_ratfunc()
    w = dp_membership(x)
    res = {k: str(v) for k, v in dp_residuals(x, w).items()}
    print(f"x = {x}: s = {w.s}, u = {w.u}, v = {w.v}, residuals {res}")

# %% Across every nonzero x of height <= 3, only t and t^3 satisfy the system.
members = [str(x) for x in enumerate_by_height(F3, 3) if x and dp_membership(x)]
print("\nmembers of height <= 3 over F_3:", members)

# %% Characteristic 2 adds square conditions u = w^2 + t and v = sw^2 + 1/t.
w = dp_membership(parse_ratfunc("t^4", F2))
print("\np = 2, x = t^4: u =", w.u, " w =", w.w, " v =", w.v, " sw =", w.sw)

# %% For x = t the char-2 equations force u in {0, 1}, and neither t nor t+1 is a square.
try:
    dp_membership(parse_ratfunc("t", F2))
except InternalLemmaViolation as exc:
    print("p = 2, x = t:", exc)
