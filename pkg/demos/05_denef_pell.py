"""Pell solutions over Z[t] and multiplication detected at t = 1.

Run: python demos/05_denef_pell.py
"""
# %%
from dioph import denef_mul_rel, pell_solution, pell_verify
from dioph.pell import denef_witness, pell_add

for n in range(5):
    s = pell_solution(n)
    print(f"n={n}: x = {str(s.x):<22} y = {str(s.y):<18} x^2-(t^2-1)y^2 = 1: {pell_verify(s.x, s.y)}")

# %% Evaluating at t = 1 recovers the index, so y_n - y_r y_s vanishes there exactly when n = rs.
print("\ny_7(1) =", pell_solution(7).y(1))
print("2*3 = 6:", denef_mul_rel(2, 3, 6), "  h =", denef_witness(2, 3, 6))
print("2*3 = 5:", denef_mul_rel(2, 3, 5))

# %% Unit multiplication adds indices.
x, y = pell_add(pell_solution(2), pell_solution(3))
print("\n(x_2, y_2) * (x_3, y_3) == (x_5, y_5):", (x, y) == (pell_solution(5).x, pell_solution(5).y))
