"""Selecting a discrete subset of a dense set of rationals.

Run: python demos/06_discretizer.py
"""
# %%
from fractions import Fraction as Fr

from dioph import cluster_count, discretize, interval_index, squares_sequence
from dioph.mazur import interval

for r in (Fr(1, 2), Fr(4, 9), Fr(9, 100), Fr(1, 4), Fr(3, 4)):
    print(f"{str(r):>6} lies in interval j = {interval_index(r)}")

# %% The squares r^2 are dense in [0, inf); keep the ones inside some [1/(2j+1), 1/(2j)].
pts = squares_sequence(200)
ztilde, dtilde = discretize(pts)
print("\nfirst selected indices:", ztilde[:12])
occupied = sorted({interval_index(p.value) for p in dtilde})
print("occupied intervals:", occupied[:15], "...")

# %% Counting clusters: with eps below the gaps between intervals, points inside one
# interval may still be farther apart than eps, so clusters can outnumber intervals.
gaps = [interval(a)[0] - interval(b)[1] for a, b in zip(occupied, occupied[1:])]
eps = min(gaps) / 2
print(f"\neps = {float(eps):.2e}: {cluster_count([p.value for p in dtilde], eps)} clusters, "
      f"{len(occupied)} occupied intervals, {len(dtilde)} selected points")
print("eps = 1/50:", cluster_count([p.value for p in dtilde], Fr(1, 50)), "clusters")
