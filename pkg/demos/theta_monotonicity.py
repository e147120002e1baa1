"""Theta(t) = angle(x, y + t x) sweeps from pi down to 0 for every norm.

For a degenerate weight the sweep breaks: the axis seminorm |x1| jumps
straight from pi to 0 where y + t x enters its zero-set.

Run: python3 demos/theta_monotonicity.py
"""

import numpy as np

from angle_space.angle_core import theta
from angle_space.axioms import check_an11
from angle_space.weights import AxisSeminorm, Holder

x, y = (1.0, 0.0), (0.0, 1.0)
ts = [-100, -10, -1, -0.1, 0, 0.1, 1, 10, 100]
print("t       " + "  ".join(f"{t:>7}" for t in ts))
for p in (1, 2, 4):
    vals = [theta(Holder(p), x, y, t).value for t in ts]
    print(f"lp:{p:<4} " + "  ".join(f"{v:7.4f}" for v in vals))

for w in (Holder(1.5), AxisSeminorm()):
    r = check_an11(w, (1.0, 0.0), (1.0, 1.0))
    print(f"\n{w.spec}: {r.status}, grid of {r.grid_size} points,"
          f" endpoint gap {r.endpoint_gap:.1e}")
    if r.zero_set_hits:
        j = r.largest_jump
        print(f"  zero-set hit at t={r.zero_set_hits}; Theta jumps "
              f"{j['theta0']:.4f} -> {j['theta1']:.4f} between t={j['t0']} and t={j['t1']}")
    else:
        print(f"  largest step {float(np.max(-np.diff(r.thetas))):.4f} rad")
