"""Concave corners of a unit sphere and the CSB violations they force.

A corner spec ``(y_hat, x_bar, eps, m_minus, m_plus)`` claims that for all
``delta`` in ``[0, eps]`` both

    u(delta) = delta * sign(x_bar) + (1 + delta * m_plus) * sign(y_hat)
    v(delta) = -delta * sign(x_bar) + (1 - delta * m_minus) * sign(y_hat)

lie on the unit sphere. With ``m_minus < m_plus`` the spade product of the
pair expands exactly as

    P(delta) = 1 + delta (m_plus - m_minus) + delta**2 K / 4,
    K = (m_plus - m_minus)**2 - w(2 sign(x_bar) + (m_plus + m_minus) sign(y_hat))**2,

which exceeds 1 for small ``delta``: the Cauchy-Schwarz bound fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .angle_core import spade_product
from .errors import InternalInconsistency, InvalidInput, NoViolationFound, ZeroSetVector
from .tolerances import CORNER_TOL, CSB_TOL, REL_TOL, ZERO_TOL
from .weights import SphereWeight, Vec2, Weight, as_vec, sign


@dataclass(frozen=True)
class CornerSpec:
    y_hat: Vec2
    x_bar: Vec2
    eps: float
    m_minus: float
    m_plus: float

    def __post_init__(self):
        object.__setattr__(self, "y_hat", as_vec(self.y_hat))
        object.__setattr__(self, "x_bar", as_vec(self.x_bar))
        if not self.eps > 0:
            raise InvalidInput(f"eps must be positive, got {self.eps}")
        if not self.m_minus < self.m_plus:
            raise InvalidInput(f"need m_minus < m_plus, got {self.m_minus} >= {self.m_plus}")

    def sign_y(self, w: Weight) -> Vec2:
        return sign(w, self.y_hat)

    def sign_x(self, w: Weight) -> Vec2:
        return sign(w, self.x_bar)

    def vectors(self, w: Weight, delta: float) -> tuple[Vec2, Vec2]:
        """The two sphere points ``u(delta), v(delta)``."""
        a, s = self.sign_x(w), self.sign_y(w)
        cu, cv = 1.0 + delta * self.m_plus, 1.0 - delta * self.m_minus
        u = (delta * a[0] + cu * s[0], delta * a[1] + cu * s[1])
        v = (-delta * a[0] + cv * s[0], -delta * a[1] + cv * s[1])
        return u, v

    def K(self, w: Weight) -> float:
        a, s = self.sign_x(w), self.sign_y(w)
        c = self.m_plus + self.m_minus
        n = w((2 * a[0] + c * s[0], 2 * a[1] + c * s[1]))
        return (self.m_plus - self.m_minus) ** 2 - n * n

    def to_dict(self) -> dict:
        return {"y_hat": list(self.y_hat), "x_bar": list(self.x_bar), "eps": self.eps,
                "m_minus": self.m_minus, "m_plus": self.m_plus}


def verify_concave_corner(w: Weight, spec: CornerSpec, grid_n: int = 101,
                          tol: float = CORNER_TOL) -> bool:
    """Both sphere conditions hold at ``grid_n`` equally spaced deltas."""
    for name, v in (("y_hat", spec.y_hat), ("x_bar", spec.x_bar)):
        if w(v) <= ZERO_TOL:
            raise ZeroSetVector(f"{name} = {v} lies in the zero-set of {w.spec}")
    for d in np.linspace(0.0, spec.eps, grid_n):
        u, v = spec.vectors(w, float(d))
        if abs(w(u) - 1.0) > tol or abs(w(v) - 1.0) > tol:
            return False
    return True


class QuadraticP(NamedTuple):
    closed: float
    direct: float


def spade_quadratic_P(w: Weight, spec: CornerSpec, delta: float,
                      rel_tol: float = REL_TOL) -> QuadraticP:
    """Closed-form expansion and direct spade product, cross-checked."""
    if not 0.0 <= delta <= spec.eps:
        raise InvalidInput(f"delta {delta} outside [0, {spec.eps}]")
    D = spec.m_plus - spec.m_minus
    closed = 1.0 + delta * D + 0.25 * delta * delta * spec.K(w)
    direct = spade_product(w, *spec.vectors(w, delta))
    if abs(closed - direct) > rel_tol * max(1.0, abs(closed)):
        raise InternalInconsistency(
            f"closed form {closed!r} and direct product {direct!r} disagree at "
            f"delta={delta}; the corner spec does not describe a corner of {w.spec}")
    return QuadraticP(closed, direct)


@dataclass(frozen=True)
class CSBWitness:
    u: Vec2
    v: Vec2
    product: float
    delta: float

    def to_dict(self) -> dict:
        return {"u": list(self.u), "v": list(self.v), "product": self.product,
                "delta": self.delta}


def _default_delta(spec: CornerSpec, K: float) -> float:
    d = spec.eps / 10
    if K < 0:
        # keep the negative quadratic term from eating the linear gain
        d = min(d, (spec.m_plus - spec.m_minus) / max(abs(K), 1.0))
    return d


def csb_witness_from_corner(w: Weight, spec: CornerSpec,
                            csb_tol: float = CSB_TOL) -> CSBWitness:
    """Unit vectors near the corner whose spade product exceeds 1."""
    if not verify_concave_corner(w, spec):
        raise NoViolationFound(f"{spec} is not a concave corner of {w.spec}")
    deltas = [_default_delta(spec, spec.K(w))]
    deltas += [float(d) for d in np.linspace(0.0, spec.eps, 65)[1:]]
    for d in deltas:
        u, v = spec.vectors(w, d)
        p = spade_product(w, u, v)
        if p > 1.0 + csb_tol:
            return CSBWitness(u, v, p, d)
    raise NoViolationFound(f"spade product never exceeds 1 on [0, {spec.eps}]")


# ------------------------------------------------------------------ detection

def _spec_at(w: Weight, prev: Vec2, s: Vec2, nxt: Vec2) -> CornerSpec | None:
    """Corner spec at sphere point ``s`` from straight pieces towards ``prev``
    and ``nxt``; None unless the turn is concave."""
    n = math.hypot(*s)
    p = (-s[1] / n, s[0] / n)
    if p[0] < 0 or (p[0] == 0 and p[1] < 0):
        p = (-p[0], -p[1])
    p = (p[0] + 0.0, p[1] + 0.0)  # no negative zeros in reports
    wp = w.eval(p)
    if wp <= ZERO_TOL:
        return None
    q = (p[0] / wp, p[1] / wp)
    # solve e = alpha * sign(p) + beta * s for each edge
    det = q[0] * s[1] - q[1] * s[0]

    def coords(r):
        e = (r[0] - s[0], r[1] - s[1])
        return ((e[0] * s[1] - e[1] * s[0]) / det, (q[0] * e[1] - q[1] * e[0]) / det)

    a1, b1 = coords(nxt)
    a2, b2 = coords(prev)
    if a1 * a2 >= 0:
        return None
    if a1 < 0:
        a1, b1, a2, b2 = a2, b2, a1, b1
    m_plus, m_minus = b1 / a1, b2 / a2
    if not m_minus < m_plus - CORNER_TOL:
        return None
    return CornerSpec(s, p, min(a1, -a2), m_minus, m_plus)


def detect_corners(w: Weight, n: int = 720) -> list[CornerSpec]:
    """Heuristic search for concave corners.

    Polyline spheres are scanned vertex by vertex. Other weights are sampled
    at ``n`` directions and each concave turn between neighbouring samples
    becomes a candidate. Only candidates that pass
    :func:`verify_concave_corner` are returned.
    """
    if isinstance(w, SphereWeight):
        pts = list(w.vertices)
    else:
        phi = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
        U = np.column_stack([np.cos(phi), np.sin(phi)])
        nw = w.many(U)
        if np.any(nw <= ZERO_TOL):
            return []
        pts = [tuple(p) for p in U / nw[:, None]]
    out = []
    k = len(pts)
    for i in range(k):
        spec = _spec_at(w, pts[i - 1], pts[i], pts[(i + 1) % k])
        if spec is None:
            continue
        try:
            if verify_concave_corner(w, spec):
                out.append(spec)
        except ZeroSetVector:
            pass
    return out
