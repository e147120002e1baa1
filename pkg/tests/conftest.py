import math

import mpmath
from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

mpmath.mp.dps = 40


def mp_holder(p, v):
    """Holder weight in 40-digit arithmetic."""
    a, b = (abs(mpmath.mpf(c)) for c in v)
    if math.isinf(p):
        return max(a, b)
    p = mpmath.mpf(p)
    return (a**p + b**p) ** (1 / p)


def mp_ratio(p, x, y):
    """Spade ratio in 40-digit arithmetic, written out from the definition."""
    nx, ny = mp_holder(p, x), mp_holder(p, y)
    xh = [mpmath.mpf(c) / nx for c in x]
    yh = [mpmath.mpf(c) / ny for c in y]
    hp = mp_holder(p, [xh[0] + yh[0], xh[1] + yh[1]])
    hm = mp_holder(p, [xh[0] - yh[0], xh[1] - yh[1]])
    return (hp**2 - hm**2) / 4
