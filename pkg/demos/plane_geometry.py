"""The planar constructions behind Theta's monotonicity.

Run: python3 demos/plane_geometry.py
"""

from angle_space.lemmas import run_lemma_checks
from angle_space.plane_geometry import Line, collinearity_residuals, phor, projections_and_nu

L = Line(m=-1, b=5)
S, T = L.intersections()
P = phor(-1, 5)
print(f"line y = -x + 5 meets y = x - 1 at S={S} and y = x + 1 at T={T}")
print(f"P_hor = {P}; (x+1, y) = {(P[0] + 1, P[1])} lies on the ray through S,"
      f" (x-1, y) = {(P[0] - 1, P[1])} on the ray through T")
print("residuals:", collinearity_residuals(L))

p = projections_and_nu(0.5, 2, 2)
print(f"\nslope 0.5 through (2, 2): S_bar={p.S_bar}, T_bar={p.T_bar}, nu={p.nu},"
      f" same side: {p.same_side}")

res = run_lemma_checks(n=2000, seed=0)
print("\nbatch check ok:", res["ok"])
print("  P_hor constructions:", res["phor"])
print("  projections:", res["projections"])
