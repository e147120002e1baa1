"""Polar coordinates relative to a basis in a normed plane.

Run: python3 demos/polar_coordinates.py
"""

import math

from angle_space.polar import PolarCoord, polar_decode, polar_encode
from angle_space.weights import Holder

b1, b2 = (1.0, 0.0), (0.0, 1.0)
w = Holder(1)
for v in [(1, 1), (-2, 0.5), (0.3, -4), (-1, -1)]:
    p = polar_encode(w, b1, b2, v)
    back = polar_decode(w, b1, b2, p)
    print(f"v={v!s:12} rho={p.rho:.4f} alpha={math.degrees(p.alpha):9.4f} deg  "
          f"decoded={tuple(round(c, 12) for c in back)}")

# Walking around the l^3 unit circle at equal angle steps.
w = Holder(3)
print("\nl^3 unit circle at 30 degree steps:")
for k in range(-5, 7):
    v = polar_decode(w, b1, b2, PolarCoord(1.0, math.radians(30 * k)))
    print(f"  {30 * k:5d} deg -> ({v[0]:+.5f}, {v[1]:+.5f})  weight {w(v):.12f}")
