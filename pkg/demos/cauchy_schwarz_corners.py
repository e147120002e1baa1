"""Concave corners of a unit sphere force Cauchy-Schwarz violations.

The polygon weight's sphere is a hexagon through (0, +-r) and (+-1, +-1).
For r < 1 the points (0, +-r) are concave corners, and pairs of unit
vectors on either side have a spade product above 1.

Run: python3 demos/cauchy_schwarz_corners.py
"""

from angle_space.angle_core import thy_angle
from angle_space.axioms import csb_scan
from angle_space.corners import csb_witness_from_corner, detect_corners, spade_quadratic_P
from angle_space.weights import Holder, Polygon

for p in (1, 2, 3):
    s = csb_scan(Holder(p), n=5000, seed=0)
    print(f"lp:{p}: {len(s.violations)} violations in {s.samples} samples")

for r in (0.5, 0.8, 1.0):
    w = Polygon(r)
    corners = detect_corners(w)
    print(f"\n{w.spec}: {len(corners)} concave corners")
    for spec in corners:
        wit = csb_witness_from_corner(w, spec)
        print(f"  corner {spec.y_hat}, slopes {spec.m_minus:+.3f} / {spec.m_plus:+.3f}")
        print(f"    u={wit.u}, v={wit.v}, product {wit.product:.6f} > 1")
        print(f"    angle defined? {thy_angle(w, wit.u, wit.v).ok}")

w = Polygon(0.5)
spec = detect_corners(w)[-1]
print("\nspade product along the corner, polygon:0.5 (1 + 2 delta):")
for d in (0.0, 0.05, 0.1, 0.2, 0.5):
    P = spade_quadratic_P(w, spec, d)
    print(f"  delta={d:4}: closed {P.closed:.6f}  direct {P.direct:.6f}")
