"""Convex hull of a unit ball and its gauge.

The gauge (Minkowski functional) of ``conv(B)`` is the largest seminorm
below ``w``. When it is a norm the weight is called normable and angles can
be measured through the gauge instead of ``w`` itself; that generalized angle
never violates Cauchy-Schwarz.

Zero-set directions make the ball unbounded. A single zero-set line turns
the hull into a strip ``|n . v| <= c``; two independent lines make it the
whole plane, with gauge identically 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .angle_core import AngleResult, thy_angle
from .errors import DegenerateInput, NotNormable, UnboundedDirection, ZeroVector
from .tolerances import ZERO_TOL
from .weights import Claims, SphereWeight, Vec2, Weight, as_vec


class SphereSample(NamedTuple):
    points: list
    rays: list


def _line_key(r: Vec2) -> Vec2:
    # one representative per line through the origin
    n = math.hypot(*r)
    # cos(pi/2) and friends are not exactly 0
    r = tuple(0.0 if abs(c / n) < 1e-15 else c / n for c in r)
    if r[0] < 0 or (r[0] == 0 and r[1] < 0):
        r = (-r[0], -r[1])
    return (r[0] + 0.0, r[1] + 0.0)


def sample_sphere(w: Weight, n: int = 1024, ray_tol: float = 1e-6) -> SphereSample:
    """Unit-sphere points at ``n`` equally spaced directions.

    Directions in the zero-set are returned as rays instead. Sampled local
    minima of the weight are refined with a bounded scalar minimizer; a
    minimum below ``ray_tol`` times the median weight counts as a zero-set
    direction. The relative threshold is needed because weights such as
    ``sqrt|x1 x2|`` approach zero like the square root of the angle, so
    floating-point directions never get closer than about 1e-8.
    """
    if n < 8:
        raise ValueError(f"need at least 8 directions, got {n}")
    phi = 2 * np.pi * np.arange(n) / n
    U = np.column_stack([np.cos(phi), np.sin(phi)])
    # exact axis directions; sub-additive weights amplify sin(pi) = 1e-16
    U[np.abs(U) < 1e-15] = 0.0
    vals = w.many(U)
    med = float(np.median(vals))
    rays: list[Vec2] = []
    keep = np.ones(n, dtype=bool)
    for k in range(n):
        if vals[k] <= ZERO_TOL:
            rays.append((float(U[k, 0]), float(U[k, 1])))
            keep[k] = False
            continue
        if vals[k] <= ray_tol * med:
            rays.append((float(U[k, 0]), float(U[k, 1])))
            keep[k] = False
            continue
        lo, hi = vals[k - 1], vals[(k + 1) % n]
        if vals[k] <= lo and vals[k] <= hi and vals[k] < 0.5 * med:
            step = 2 * np.pi / n

            def f(a):
                return w((math.cos(a), math.sin(a)))

            res = minimize_scalar(f, bounds=(phi[k] - step, phi[k] + step),
                                  method="bounded", options={"xatol": 1e-14})
            if res.fun <= ray_tol * med:
                rays.append((math.cos(res.x), math.sin(res.x)))
    P = U[keep] / vals[keep][:, None]
    return SphereSample([(float(a), float(b)) for a, b in P], rays)


@dataclass(frozen=True)
class HullPolygon:
    """Counterclockwise convex polygon plus the zero-set lines of the ball."""

    vertices: tuple
    rays: tuple = ()
    lines: tuple = field(init=False, repr=False)
    _edges: np.ndarray = field(init=False, repr=False, compare=False)
    _offsets: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lines: list[Vec2] = []
        for r in self.rays:
            key = _line_key(r)
            if all(abs(key[0] * q[1] - key[1] * q[0]) > 1e-6 for q in lines):
                lines.append(key)
        object.__setattr__(self, "lines", tuple(lines))
        V = np.array(self.vertices, dtype=float)
        D = np.roll(V, -1, axis=0) - V
        object.__setattr__(self, "_edges", D)
        object.__setattr__(self, "_offsets", V[:, 0] * D[:, 1] - V[:, 1] * D[:, 0])

    @property
    def bounded(self) -> bool:
        return not self.lines

    @property
    def origin_interior(self) -> bool:
        """Origin strictly left of every edge (or inside a strip / the plane)."""
        if self.lines:
            return True
        return bool(np.all(self._offsets > 0))

    def strip(self) -> tuple[Vec2, float]:
        """Unit normal and half-width of the strip hull (one zero-set line)."""
        r = self.lines[0]
        nrm = (-r[1], r[0])
        V = np.array(self.vertices)
        return nrm, float(np.max(np.abs(V @ np.array(nrm))))


def convex_hull(points: Sequence[Vec2], rays: Sequence[Vec2] = ()) -> HullPolygon:
    """Andrew's monotone chain; collinear and duplicate points are dropped."""
    pts = sorted(set(as_vec(p) for p in points))
    if len(pts) < 3:
        raise DegenerateInput(f"need at least 3 distinct points, got {len(pts)}")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points are collinear")
    return HullPolygon(tuple(hull), tuple(as_vec(r) for r in rays))


def minkowski_functional(h: HullPolygon, v, strict: bool = False) -> float:
    """``inf {r > 0 : v / r in h}``.

    Along a zero-set line the value is 0; with ``strict=True`` such
    directions raise :class:`UnboundedDirection` instead.
    """
    v = as_vec(v)
    if v == (0.0, 0.0):
        return 0.0
    out = float(_gauge_many(h, np.array([v]))[0])
    if strict and out <= ZERO_TOL * math.hypot(*v):
        raise UnboundedDirection(f"the ray through {v} never leaves the hull")
    return out


def _gauge_many(h: HullPolygon, V: np.ndarray) -> np.ndarray:
    if len(h.lines) >= 2:
        return np.zeros(len(V))
    if h.lines:
        nrm, c = h.strip()
        return np.abs(V @ np.array(nrm)) / c
    D, c = h._edges, h._offsets
    num = V[:, :1] * D[None, :, 1] - V[:, 1:] * D[None, :, 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where(c > 0, num / np.where(c > 0, c, 1.0),
                        np.where(num > 0, np.inf, -np.inf))
    out = np.max(vals, axis=1)
    return np.where((V[:, 0] == 0) & (V[:, 1] == 0), 0.0, np.maximum(out, 0.0))


def hull_of(w: Weight, n: int = 1024) -> HullPolygon:
    """conv(B); polyline spheres use their exact vertices."""
    if isinstance(w, SphereWeight):
        return convex_hull(w.vertices)
    s = sample_sphere(w, n)
    return convex_hull(s.points, s.rays)


@dataclass(frozen=True, eq=False)
class HullWeight(Weight):
    """The gauge of a hull polygon, usable wherever a weight is expected."""

    hull: HullPolygon
    label: str = "hull"

    @property
    def spec(self) -> str:
        return self.label

    @property
    def claims(self) -> Claims:
        normable = self.hull.bounded and self.hull.origin_interior
        return Claims(is_seminorm=True, is_norm=normable)

    def _eval(self, x1, x2):
        return float(_gauge_many(self.hull, np.array([[x1, x2]]))[0])

    def _many(self, V):
        return _gauge_many(self.hull, V)


@lru_cache(maxsize=64)
def conv_weight(w: Weight, n: int = 1024) -> HullWeight:
    """Seminorm whose unit ball is conv(B)."""
    return HullWeight(hull_of(w, n), label=f"conv({w.spec})")


def is_normable(w: Weight, n: int = 1024) -> bool:
    h = conv_weight(w, n).hull
    return h.bounded and h.origin_interior


def generalized_thy_angle(w: Weight, x, y, n: int = 1024) -> AngleResult:
    """Thy angle measured with the gauge of conv(B)."""
    x, y = as_vec(x), as_vec(y)
    if x == (0.0, 0.0) or y == (0.0, 0.0):
        raise ZeroVector("generalized angle needs nonzero vectors")
    if not is_normable(w, n):
        raise NotNormable(f"{w.spec} is not normable: its hull gauge has a zero-set")
    return thy_angle(conv_weight(w, n), x, y)
