"""Homogeneous weights on the plane.

A weight is any absolutely homogeneous nonnegative functional on R^2. The
triangle inequality is *not* assumed: seminorms and norms are special
cases, flagged through ``claims`` (metadata only, never trusted by the
algorithms).

Every weight has a fast scalar path (``w(v)``) working on Python floats and
a vectorized path (``w.many(V)``) for ``(N, 2)`` arrays.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NotStarShaped, WeightSpecError, ZeroSetVector
from .tolerances import REL_TOL, ZERO_TOL

Vec2 = tuple[float, float]


def as_vec(v: Sequence[float]) -> Vec2:
    """Coerce a length-2 sequence into a tuple of finite floats."""
    if len(v) != 2:
        raise ValueError(f"expected a 2-vector, got length {len(v)}")
    x1, x2 = float(v[0]), float(v[1])
    if not (math.isfinite(x1) and math.isfinite(x2)):
        raise ValueError(f"vector components must be finite, got {v!r}")
    return (x1, x2)


def _cross(a: Vec2, b: Vec2) -> float:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class Claims:
    is_hw: bool = True
    is_seminorm: bool = False
    is_norm: bool = False


class Weight:
    """Base class. Subclasses implement ``_eval`` (and ideally ``_many``)."""

    claims: Claims = Claims()

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def _eval(self, x1: float, x2: float) -> float:
        raise NotImplementedError

    def _many(self, V: np.ndarray) -> np.ndarray:
        return np.array([self._eval(float(a), float(b)) for a, b in V])

    def __call__(self, v: Sequence[float]) -> float:
        return self._eval(float(v[0]), float(v[1]))

    def eval(self, v: Sequence[float]) -> float:
        return self._eval(*as_vec(v))

    def many(self, V) -> np.ndarray:
        V = np.asarray(V, dtype=float).reshape(-1, 2)
        return self._many(V)

    def __str__(self) -> str:
        return self.spec


@dataclass(frozen=True)
class Holder(Weight):
    """(|x1|^p + |x2|^p)^(1/p); ``p = inf`` gives the max-norm."""

    p: float

    def __post_init__(self):
        if not self.p > 0:
            raise ValueError(f"Holder exponent must be positive, got {self.p}")

    @property
    def claims(self) -> Claims:
        return Claims(is_seminorm=self.p >= 1, is_norm=self.p >= 1)

    @property
    def spec(self) -> str:
        return "lp:inf" if math.isinf(self.p) else f"lp:{self.p:g}"

    def _eval(self, x1: float, x2: float) -> float:
        a, b = abs(x1), abs(x2)
        p = self.p
        if p == 1:
            return a + b
        if p == 2:
            return math.hypot(a, b)
        if math.isinf(p):
            return max(a, b)
        m = max(a, b)
        if m == 0.0:
            return 0.0
        s = min(a, b) / m
        return m * (1.0 + s**p) ** (1.0 / p)

    def _many(self, V: np.ndarray) -> np.ndarray:
        A = np.abs(V)
        p = self.p
        if p == 1:
            return A[:, 0] + A[:, 1]
        if p == 2:
            return np.hypot(A[:, 0], A[:, 1])
        if math.isinf(p):
            return A.max(axis=1)
        m = A.max(axis=1)
        safe = np.where(m > 0, m, 1.0)
        s = A.min(axis=1) / safe
        return np.where(m > 0, m * (1.0 + s**p) ** (1.0 / p), 0.0)


@dataclass(frozen=True)
class AxisSeminorm(Weight):
    """|x1|; the zero-set is the vertical axis."""

    claims = Claims(is_seminorm=True)

    @property
    def spec(self) -> str:
        return "axis"

    def _eval(self, x1, x2):
        return abs(x1)

    def _many(self, V):
        return np.abs(V[:, 0])


@dataclass(frozen=True)
class HyperbolaWeight(Weight):
    """sqrt(|x1 * x2|); unit sphere is the hyperbola |x1 x2| = 1."""

    claims = Claims()

    @property
    def spec(self) -> str:
        return "hyperbola"

    def _eval(self, x1, x2):
        return math.sqrt(abs(x1 * x2))

    def _many(self, V):
        return np.sqrt(np.abs(V[:, 0] * V[:, 1]))


@dataclass(frozen=True)
class SphereWeight(Weight):
    """Weight whose unit sphere is a closed polyline, star-shaped about 0.

    Evaluation is exact per edge: the ray through ``v`` meets edge
    ``(a, b)`` at ``v / w(v)`` with ``w(v) = cross(v, b - a) / cross(a, b)``.
    """

    vertices: tuple[Vec2, ...]
    label: str = "sphere"
    _coef: np.ndarray = field(init=False, repr=False, compare=False)
    _angles: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = [as_vec(p) for p in self.vertices]
        if len(verts) < 3:
            raise NotStarShaped("sphere polyline needs at least 3 vertices")
        n = len(verts)
        area2 = sum(_cross(verts[i], verts[(i + 1) % n]) for i in range(n))
        if area2 < 0:
            verts = verts[::-1]
        winding = 0.0
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            c = _cross(a, b)
            if c <= 0:
                raise NotStarShaped(
                    f"edge {a} -> {b} is not seen counterclockwise from the origin")
            winding += math.atan2(c, a[0] * b[0] + a[1] * b[1])
        if abs(winding - 2 * math.pi) > 1e-9:
            raise NotStarShaped("polyline winds around the origin more than once")

        # rotate so vertex angles increase from the smallest
        angles = [math.atan2(p[1], p[0]) for p in verts]
        k = int(np.argmin(angles))
        verts = verts[k:] + verts[:k]
        angles = np.array([math.atan2(p[1], p[0]) for p in verts])
        coef = np.empty((n, 2))
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            c = _cross(a, b)
            coef[i] = ((b[1] - a[1]) / c, -(b[0] - a[0]) / c)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "_coef", coef)
        object.__setattr__(self, "_angles", angles)

    @property
    def claims(self) -> Claims:
        convex = _is_convex_ccw(self.vertices)
        return Claims(is_seminorm=convex, is_norm=convex)

    @property
    def spec(self) -> str:
        return self.label

    def _edge(self, phi: float) -> int:
        # edge i spans directions [angles[i], angles[i+1]) cyclically
        i = int(np.searchsorted(self._angles, phi, side="right")) - 1
        return i % len(self._angles)

    def _eval(self, x1, x2):
        if x1 == 0.0 and x2 == 0.0:
            return 0.0
        c = self._coef[self._edge(math.atan2(x2, x1))]
        return float(c[0] * x1 + c[1] * x2)

    def _many(self, V):
        phi = np.arctan2(V[:, 1], V[:, 0])
        idx = (np.searchsorted(self._angles, phi, side="right") - 1) % len(self._angles)
        c = self._coef[idx]
        out = c[:, 0] * V[:, 0] + c[:, 1] * V[:, 1]
        return np.where((V[:, 0] == 0) & (V[:, 1] == 0), 0.0, out)


def _is_convex_ccw(verts: Sequence[Vec2]) -> bool:
    n = len(verts)
    for i in range(n):
        a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
        if _cross((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) < 0:
            return False
    return True


def Polygon(r: float) -> SphereWeight:
    """Hexagon weight through (0,r), (1,1), (1,-1), (0,-r), (-1,-1), (-1,1).

    The ball is convex exactly when ``r >= 1``; for ``r < 1`` the vertices
    (0, +-r) are concave corners.
    """
    if not r > 0:
        raise ValueError(f"polygon parameter must be positive, got {r}")
    verts = ((0.0, r), (1.0, 1.0), (1.0, -1.0), (0.0, -r), (-1.0, -1.0), (-1.0, 1.0))
    return SphereWeight(verts, label=f"polygon:{r:g}")


def sphere_from_csv(path: str) -> SphereWeight:
    """Read a closed sphere polyline, one ``x1,x2`` pair per line."""
    pts = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().startswith("#"):
                continue
            try:
                pts.append((float(row[0]), float(row[1])))
            except (ValueError, IndexError):
                # header line
                if pts:
                    raise
    return SphereWeight(tuple(pts), label=f"sphere-file:{path}")


@dataclass(frozen=True, eq=False)
class CustomFn(Weight):
    """Wrap an arbitrary ``f(x1, x2) -> float``; homogeneity is trusted.

    Run :func:`validate_homogeneity` before relying on it.
    """

    fn: Callable[[float, float], float]
    label: str = "custom"
    claims: Claims = Claims()

    @property
    def spec(self) -> str:
        return self.label

    def _eval(self, x1, x2):
        return float(self.fn(x1, x2))


def parse_weight(spec: str) -> Weight:
    """Parse ``lp:<p>``, ``polygon:<r>``, ``axis``, ``hyperbola`` or
    ``sphere-file:<path>``."""
    s = spec.strip()
    kind, sep, arg = s.partition(":")
    pos = len(kind) + len(sep)
    if kind in ("axis", "hyperbola"):
        if sep:
            raise WeightSpecError(f"{kind!r} takes no argument", spec, len(kind))
        return AxisSeminorm() if kind == "axis" else HyperbolaWeight()
    if kind == "sphere-file":
        if not arg:
            raise WeightSpecError("missing path", spec, pos)
        try:
            return sphere_from_csv(arg)
        except OSError as exc:
            raise WeightSpecError(f"cannot read sphere file: {exc}", spec, pos) from exc
    if kind in ("lp", "polygon"):
        if not arg:
            raise WeightSpecError("missing numeric argument", spec, pos)
        try:
            val = float(arg.replace("∞", "inf"))
        except ValueError:
            raise WeightSpecError(f"not a number: {arg!r}", spec, pos) from None
        if not val > 0:
            raise WeightSpecError("argument must be positive", spec, pos)
        if kind == "lp":
            return Holder(val)
        if math.isinf(val):
            raise WeightSpecError("polygon parameter must be finite", spec, pos)
        return Polygon(val)
    raise WeightSpecError(f"unknown weight kind {kind!r}", spec, 0)


def in_zero_set(w: Weight, v: Sequence[float]) -> bool:
    return w(v) <= ZERO_TOL


def sign(w: Weight, v: Sequence[float]) -> Vec2:
    """Project ``v`` onto the unit sphere of ``w``."""
    x1, x2 = as_vec(v)
    n = w._eval(x1, x2)
    if n <= ZERO_TOL:
        raise ZeroSetVector(f"{(x1, x2)} lies in the zero-set of {w.spec}")
    return (x1 / n, x2 / n)


def _random_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    phi = rng.uniform(0, 2 * np.pi, n)
    r = np.exp(rng.uniform(np.log(0.1), np.log(10.0), n))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi)])


def homogeneity_defect(w: Weight, n: int = 500, seed: int = 0) -> float:
    """Largest relative deviation of ``w(r v)`` from ``|r| w(v)`` on samples."""
    rng = np.random.default_rng(seed)
    V = _random_vectors(rng, n)
    r = rng.choice([-1.0, 1.0], n) * np.exp(rng.uniform(-3, 3, n))
    base = w.many(V)
    scaled = w.many(V * r[:, None])
    if np.any(base < 0) or np.any(scaled < 0):
        return math.inf
    denom = np.maximum(np.abs(r) * base, ZERO_TOL)
    return float(np.max(np.abs(scaled - np.abs(r) * base) / denom))


def validate_homogeneity(w: Weight, n: int = 500, seed: int = 0,
                         rel_tol: float = REL_TOL) -> bool:
    return homogeneity_defect(w, n, seed) <= rel_tol


def find_triangle_violation(w: Weight, n: int = 2000, seed: int = 0,
                            abs_tol: float = 1e-12) -> tuple[Vec2, Vec2] | None:
    """Search for ``x, y`` with ``w(x + y) > w(x) + w(y)``.

    Axis-aligned unit pairs are tried first; they are the classic witnesses
    for the Holder weights with p < 1.
    """
    probes: list[tuple[Vec2, Vec2]] = [
        ((1.0, 0.0), (0.0, 1.0)), ((1.0, 0.0), (0.0, -1.0)),
        ((1.0, 1.0), (-1.0, 1.0)), ((0.1, 0.55), (-0.1, 0.55)),
    ]
    for x, y in probes:
        if w((x[0] + y[0], x[1] + y[1])) > w(x) + w(y) + abs_tol:
            return x, y
    rng = np.random.default_rng(seed)
    X = _random_vectors(rng, n)
    Y = _random_vectors(rng, n)
    gap = w.many(X + Y) - w.many(X) - w.many(Y)
    i = int(np.argmax(gap))
    if gap[i] > abs_tol:
        return (float(X[i, 0]), float(X[i, 1])), (float(Y[i, 0]), float(Y[i, 1]))
    return None


def iter_builtin_weights() -> Iterable[Weight]:
    """The example weights used throughout the docs and tests."""
    yield from (Holder(1), Holder(1.5), Holder(2), Holder(3), Holder(math.inf),
                Holder(0.5), Polygon(0.5), Polygon(2.0), AxisSeminorm(),
                HyperbolaWeight())
