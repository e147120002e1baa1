"""Numerical tolerances shared across modules."""

import math
import sys

ZERO_TOL = 1e-12
"""Absolute: a vector is in the zero-set when its weight is at most this."""

REL_TOL = 1e-9
CSB_TOL = 1e-9
"""Relative slack before a spade ratio outside [-1, 1] counts as a CSB violation."""

RATIO_SNAP = 16 * sys.float_info.epsilon
"""Ratios within this distance of +-1 are treated as exactly +-1.

arccos has infinite slope at +-1, so a few ulps of rounding in the ratio
turn into ~1e-8 rad of angle noise. Angles below ~8e-8 rad are not
resolvable in double precision anyway.
"""

ANGLE_FLOOR = math.acos(1.0 - RATIO_SNAP)
"""Smallest nonzero angle the snapped arccos can return (~8.4e-8 rad)."""

ANGLE_TOL = 1e-10
STRICT_TOL = 1e-12
HULL_TOL = 1e-3
CORNER_TOL = 1e-9
ENDPOINT_TOL = 1e-4
"""Theta at t = -+1e6 must be within this of pi and 0."""

AXIOM_TOL = 1e-9
"""Pointwise angle identities (symmetry, scaling, supplementary angles)."""

ADDITIVITY_TOL = 1e-7
