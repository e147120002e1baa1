"""Polar coordinates in a two-dimensional normed plane.

For a norm, ``t -> angle(x, y + t x)`` decreases from pi to 0 and hits every
value in between exactly once. Inverting it by bisection turns a signed
angle to ``b1`` plus a length back into a vector.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .angle_core import theta, thy_angle
from .errors import (InvalidInput, MonotonicityViolation, NotBracketed,
                     ZeroVector)
from .tolerances import ANGLE_FLOOR, ANGLE_TOL, STRICT_TOL
from .weights import Vec2, Weight, as_vec, sign


@dataclass(frozen=True)
class PolarCoord:
    """``rho`` is the weight of the vector, ``alpha`` its signed angle to b1."""

    rho: float
    alpha: float

    def __post_init__(self):
        if not self.rho >= 0:
            raise InvalidInput(f"rho must be nonnegative, got {self.rho}")
        if not -math.pi < self.alpha <= math.pi:
            raise InvalidInput(f"alpha must lie in (-pi, pi], got {self.alpha}")

    def to_dict(self) -> dict:
        return {"rho": self.rho, "alpha": self.alpha}


def _independent(b1: Vec2, b2: Vec2) -> float:
    det = b1[0] * b2[1] - b1[1] * b2[0]
    if abs(det) <= 1e-12 * math.hypot(*b1) * math.hypot(*b2):
        raise InvalidInput(f"{b1} and {b2} are linearly dependent")
    return det


def theta_inverse(w: Weight, x, y, alpha_target: float, angle_tol: float = ANGLE_TOL,
                  max_k: int = 80, max_iter: int = 200) -> float:
    """The ``t`` with ``angle(x, y + t x) = alpha_target``.

    Expands ``[-2**k, 2**k]`` until the target is straddled, then bisects.
    Targets within ``ANGLE_FLOOR`` of 0 or pi are only met to that
    accuracy. Raises :class:`NotBracketed` if no bracket is found by ``k = max_k``
    (Theta is not onto, so ``w`` is not a norm on the span) and
    :class:`MonotonicityViolation` if Theta is seen increasing.
    """
    x, y = as_vec(x), as_vec(y)
    _independent(x, y)
    if not 0.0 < alpha_target < math.pi:
        raise InvalidInput(f"target angle must lie in (0, pi), got {alpha_target}")

    def f(t: float) -> float:
        r = theta(w, x, y, t)
        if r.value is None:
            raise MonotonicityViolation(f"angle undefined at t={t} (CSB violation)")
        return r.value

    for k in range(max_k + 1):
        lo, hi = -(2.0**k), 2.0**k
        f_lo, f_hi = f(lo), f(hi)
        if f_lo < f_hi - STRICT_TOL:
            raise MonotonicityViolation(f"Theta({lo}) < Theta({hi})")
        if f_lo >= alpha_target >= f_hi:
            break
    else:
        raise NotBracketed(
            f"angle {alpha_target} not reached on [-2^{max_k}, 2^{max_k}] for {w.spec}")

    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        # arccos magnifies ratio rounding by 1 / sin(angle)
        slack = STRICT_TOL + 32 * sys.float_info.epsilon / max(math.sin(fm), 1e-300)
        if not f_lo + slack >= fm >= f_hi - slack:
            raise MonotonicityViolation(
                f"Theta not decreasing on [{lo}, {hi}]: {f_lo}, {fm}, {f_hi}")
        if fm == alpha_target:
            return mid
        if fm > alpha_target:
            lo, f_lo = mid, fm
        else:
            hi, f_hi = mid, fm
        if hi - lo < 1e-14 * max(1.0, abs(mid)):
            break
    t = lo if abs(f_lo - alpha_target) <= abs(f_hi - alpha_target) else hi
    near_end = min(alpha_target, math.pi - alpha_target) < ANGLE_FLOOR
    if abs(f(t) - alpha_target) > (ANGLE_FLOOR if near_end else angle_tol):
        raise NotBracketed(f"bisection stalled at t={t}: Theta jumps over {alpha_target}")
    return t


def polar_encode(w: Weight, b1, b2, v) -> PolarCoord:
    b1, b2, v = as_vec(b1), as_vec(b2), as_vec(v)
    if v == (0.0, 0.0):
        raise ZeroVector("cannot take polar coordinates of the zero vector")
    det = _independent(b1, b2)
    r1 = (v[0] * b2[1] - v[1] * b2[0]) / det
    r2 = (b1[0] * v[1] - b1[1] * v[0]) / det
    rho = w.eval(v)
    if r2 == 0.0:
        return PolarCoord(rho, 0.0 if r1 > 0 else math.pi)
    a = thy_angle(w, v, b1)
    if a.value is None:
        raise InvalidInput(f"angle of {v} and {b1} is undefined for {w.spec}")
    alpha = a.value if r2 > 0 else -a.value
    if alpha == -math.pi:
        alpha = math.pi
    return PolarCoord(rho, alpha)


def polar_decode(w: Weight, b1, b2, p: PolarCoord) -> Vec2:
    b1, b2 = as_vec(b1), as_vec(b2)
    _independent(b1, b2)
    if p.rho == 0:
        return (0.0, 0.0)
    if p.alpha == 0.0 or p.alpha == math.pi:
        s = sign(w, b1)
        k = p.rho if p.alpha == 0.0 else -p.rho
        return (k * s[0] + 0.0, k * s[1] + 0.0)
    y = b2 if p.alpha > 0 else (-b2[0], -b2[1])
    t = theta_inverse(w, b1, y, abs(p.alpha))
    s = sign(w, (y[0] + t * b1[0], y[1] + t * b1[1]))
    return (p.rho * s[0] + 0.0, p.rho * s[1] + 0.0)
