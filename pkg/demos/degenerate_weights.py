"""Weights with a nontrivial zero-set, and what the axiom checker says.

Run: python3 demos/degenerate_weights.py
"""

import numpy as np

from angle_space.angle_core import thy_angle_many
from angle_space.axioms import DirectionSampler, check_axioms
from angle_space.weights import AxisSeminorm, Holder, HyperbolaWeight

for w in (Holder(2), Holder(1), AxisSeminorm(), HyperbolaWeight()):
    rep = check_axioms(w, n=500, seed=0)
    row = " ".join(f"{e['id']}:{e['status'][0]}" for e in rep.to_dict()["axioms"])
    print(f"{w.spec:10} {row}")

w = HyperbolaWeight()
rng = np.random.default_rng(0)
s = DirectionSampler(w)
vals = np.round(thy_angle_many(w, s(rng, 1000), s(rng, 1000)) / (np.pi / 2), 9)
values, counts = np.unique(vals, return_counts=True)
print("\nhyperbola angles, in units of pi/2:", dict(zip(values.tolist(), counts.tolist())))
