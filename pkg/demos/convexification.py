"""Repairing a non-convex weight through the convex hull of its unit ball.

Run: python3 demos/convexification.py
"""

import math

from angle_space.angle_core import thy_angle
from angle_space.convexify import conv_weight, generalized_thy_angle, hull_of, is_normable
from angle_space.weights import AxisSeminorm, Holder, HyperbolaWeight, Polygon

w = Polygon(0.5)
print("hull of the polygon:0.5 ball:", hull_of(w).vertices)
u, v = (0.1, 0.55), (-0.1, 0.55)
print("plain angle of the CSB witness:", thy_angle(w, u, v))
g = generalized_thy_angle(w, u, v)
print(f"generalized angle: {g.degrees:.4f} deg")
print(f"generalized angle (1,0),(0,1): {generalized_thy_angle(w, (1, 0), (0, 1)).degrees} deg")

print("\nl^1/2 is not a norm, but its hull is the l^1 diamond:")
g = conv_weight(Holder(0.5), 512)
for q in [(1, 1), (3, -2), (0.5, 0.25)]:
    print(f"  {q}: w={Holder(0.5)(q):.4f}  hull gauge={g(q):.6f}  l1={abs(q[0]) + abs(q[1])}")

print("\nnormable?")
for w in (Holder(0.5), Polygon(0.3), AxisSeminorm(), HyperbolaWeight()):
    print(f"  {w.spec:12} {is_normable(w)}")

print("\nhull resolution for l^2 (max relative gauge error):")
for n in (64, 128, 256, 512):
    err = max(abs(conv_weight(Holder(2), n)((math.cos(a), math.sin(a))) - 1)
              for a in [k * 0.001 for k in range(6284)])
    print(f"  n={n:4}: {err:.2e}")
