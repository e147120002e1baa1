"""Spade product, Thy angle and the Theta map.

For a weight ``w`` and vectors outside its zero-set,

    <x|y> = 1/4 * w(x) * w(y) * (w(x^ + y^)**2 - w(x^ - y^)**2)

with ``x^ = x / w(x)``. The Thy angle is ``arccos(<x|y> / (w(x) w(y)))``,
which only needs the bracketed *ratio*; that ratio is what gets computed
and clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ZeroSetVector, ZeroVector
from .tolerances import CSB_TOL, RATIO_SNAP, ZERO_TOL
from .weights import Vec2, Weight, as_vec


@dataclass(frozen=True)
class AngleResult:
    """An angle in [0, pi], or a CSB-violation report when ``value is None``."""

    value: float | None
    product: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.value is not None

    @property
    def ratio(self) -> float:
        return self.product / self.bound if self.bound else 0.0

    @property
    def degrees(self) -> float | None:
        return None if self.value is None else math.degrees(self.value)

    @property
    def violation(self) -> dict | None:
        if self.ok:
            return None
        return {"product": self.product, "bound": self.bound}

    def __float__(self) -> float:
        if self.value is None:
            raise ValueError(
                f"angle undefined: |product| {abs(self.product):.6g} exceeds "
                f"bound {self.bound:.6g}")
        return self.value


def ratio_to_angle(ratio: float, csb_tol: float = CSB_TOL) -> float | None:
    """arccos with rounding-aware clamping; None outside the CSB band."""
    if abs(ratio) > 1.0 + csb_tol:
        return None
    if ratio >= 1.0 - RATIO_SNAP:
        return 0.0
    if ratio <= -1.0 + RATIO_SNAP:
        return math.pi
    return math.acos(ratio)


def ratio_to_angle_many(ratio: np.ndarray) -> np.ndarray:
    """Vectorized :func:`ratio_to_angle`; violations become NaN."""
    r = np.asarray(ratio, dtype=float)
    out = np.arccos(np.clip(r, -1.0, 1.0))
    out = np.where(r >= 1.0 - RATIO_SNAP, 0.0, out)
    out = np.where(r <= -1.0 + RATIO_SNAP, np.pi, out)
    return np.where(np.abs(r) > 1.0 + CSB_TOL, np.nan, out)


def _spade_ratio(w: Weight, x: Vec2, y: Vec2) -> tuple[float, float, float]:
    """(ratio, w(x), w(y)); ratio is 0 when either weight vanishes."""
    nx = w._eval(*x)
    ny = w._eval(*y)
    if nx <= ZERO_TOL or ny <= ZERO_TOL:
        return 0.0, nx, ny
    # canonical argument order makes the product symmetric bit-for-bit
    if x > y:
        x, y, na, nb = y, x, ny, nx
    else:
        na, nb = nx, ny
    a1, a2 = x[0] / na, x[1] / na
    b1, b2 = y[0] / nb, y[1] / nb
    hp = w._eval(a1 + b1, a2 + b2)
    hm = w._eval(a1 - b1, a2 - b2)
    return 0.25 * (hp * hp - hm * hm), nx, ny


def spade_product(w: Weight, x: Sequence[float], y: Sequence[float]) -> float:
    r, nx, ny = _spade_ratio(w, as_vec(x), as_vec(y))
    return nx * ny * r if r else 0.0


def thy_angle(w: Weight, x: Sequence[float], y: Sequence[float]) -> AngleResult:
    x, y = as_vec(x), as_vec(y)
    r, nx, ny = _spade_ratio(w, x, y)
    if nx <= ZERO_TOL or ny <= ZERO_TOL:
        bad = x if nx <= ZERO_TOL else y
        raise ZeroSetVector(f"{bad} lies in the zero-set of {w.spec}")
    return AngleResult(ratio_to_angle(r), nx * ny * r, nx * ny)


def euclid_angle(x: Sequence[float], y: Sequence[float]) -> float:
    """Euclidean angle, via atan2 for accuracy near 0 and pi."""
    x, y = as_vec(x), as_vec(y)
    if x == (0.0, 0.0) or y == (0.0, 0.0):
        raise ZeroVector("euclid_angle needs nonzero vectors")
    cross = x[0] * y[1] - x[1] * y[0]
    dot = x[0] * y[0] + x[1] * y[1]
    return math.atan2(abs(cross), dot)


def _h(w: Weight, x: Sequence[float], y: Sequence[float], t: float, s: float) -> float:
    x, y = as_vec(x), as_vec(y)
    z = (y[0] + t * x[0], y[1] + t * x[1])
    nx, nz = w._eval(*x), w._eval(*z)
    if nx <= ZERO_TOL:
        raise ZeroSetVector(f"{x} lies in the zero-set of {w.spec}")
    if nz <= ZERO_TOL:
        raise ZeroSetVector(f"y + t x = {z} lies in the zero-set of {w.spec} (t={t})")
    return w._eval(x[0] / nx + s * z[0] / nz, x[1] / nx + s * z[1] / nz)


def h_plus(w: Weight, x, y, t: float) -> float:
    """w(x^ + sign(y + t x))."""
    return _h(w, x, y, t, 1.0)


def h_minus(w: Weight, x, y, t: float) -> float:
    """w(x^ - sign(y + t x))."""
    return _h(w, x, y, t, -1.0)


def theta(w: Weight, x, y, t: float) -> AngleResult:
    """Thy angle between ``x`` and ``y + t x``."""
    x, y = as_vec(x), as_vec(y)
    if math.isinf(t):
        # limits of the map at -+infinity
        return AngleResult(math.pi if t < 0 else 0.0, math.nan, math.nan)
    return thy_angle(w, x, (y[0] + t * x[0], y[1] + t * x[1]))


# ---------------------------------------------------------------- vectorized

def spade_ratio_many(w: Weight, X, Y) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row-wise spade ratios for ``(N, 2)`` arrays; returns (ratio, w(X), w(Y)).

    Rows with a zero-set vector get ratio NaN.
    """
    X = np.asarray(X, dtype=float).reshape(-1, 2)
    Y = np.asarray(Y, dtype=float).reshape(-1, 2)
    swap = (X[:, 0] > Y[:, 0]) | ((X[:, 0] == Y[:, 0]) & (X[:, 1] > Y[:, 1]))
    A = np.where(swap[:, None], Y, X)
    B = np.where(swap[:, None], X, Y)
    na, nb = w.many(A), w.many(B)
    bad = (na <= ZERO_TOL) | (nb <= ZERO_TOL)
    na_s = np.where(bad, 1.0, na)
    nb_s = np.where(bad, 1.0, nb)
    Ah = A / na_s[:, None]
    Bh = B / nb_s[:, None]
    hp = w.many(Ah + Bh)
    hm = w.many(Ah - Bh)
    r = 0.25 * (hp * hp - hm * hm)
    r = np.where(bad, np.nan, r)
    nX = np.where(swap, nb, na)
    nY = np.where(swap, na, nb)
    return r, nX, nY


def thy_angle_many(w: Weight, X, Y) -> np.ndarray:
    """Row-wise Thy angles; NaN marks zero-set rows and CSB violations."""
    r, _, _ = spade_ratio_many(w, X, Y)
    return ratio_to_angle_many(r)


def theta_many(w: Weight, x, y, ts) -> tuple[np.ndarray, np.ndarray]:
    """Theta on a grid of ``t``; returns (angles, ratios).

    Angles are NaN where ``y + t x`` is in the zero-set (ratio NaN there too)
    or where the ratio breaks the CSB bound (ratio finite).
    """
    x, y = as_vec(x), as_vec(y)
    ts = np.asarray(ts, dtype=float)
    X = np.broadcast_to(np.array(x), (ts.size, 2))
    Z = np.column_stack([y[0] + ts * x[0], y[1] + ts * x[1]])
    r, _, _ = spade_ratio_many(w, X, Z)
    return ratio_to_angle_many(r), r
