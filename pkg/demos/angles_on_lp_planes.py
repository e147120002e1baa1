"""Thy angles on the l^p planes, and how they differ from Euclid.

Run: python3 demos/angles_on_lp_planes.py
"""

import math

from angle_space.angle_core import euclid_angle, spade_product, thy_angle
from angle_space.axioms import check_additivity
from angle_space.weights import Holder

x, y = (1.0, 0.0), (1.0, 1.0)
print("angle between (1,0) and (1,1):")
for p in (1, 1.5, 2, 3, math.inf):
    w = Holder(p)
    a = thy_angle(w, x, y)
    print(f"  lp:{p:<4}  spade={spade_product(w, x, y):.6f}  angle={a.degrees:8.4f} deg")
print(f"  euclid    angle={math.degrees(euclid_angle(x, y)):8.4f} deg")

# In l^1 the diagonal does not split the right angle evenly, so angles are
# not additive and triangle angle sums drop below pi.
rep = check_additivity(Holder(1), n=200, seed=0)
print("\nl^1 additivity:")
for k, what in (("An8", "split of the right angle"), ("An9", "triangle angle sum"),
                ("An10", "angle identity")):
    wit = rep[k].witness
    print(f"  {k} {rep.status(k)}: {what} {wit['lhs']:.4f} vs {wit['rhs']:.4f}")
