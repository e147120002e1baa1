"""Euclidean-plane facts behind the monotonicity of Theta.

Everything here lives in the ordinary plane. ``G_S: y = x - 1`` and
``G_T: y = x + 1`` are the two diagonal lines; a line ``L`` that avoids the
origin and is not parallel to them meets them at ``S`` and ``T``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInput, InvalidLine
from .weights import Vec2


@dataclass(frozen=True)
class Line:
    """``y = m x + b``, or the vertical line ``x = a`` when ``a`` is set."""

    m: float | None = None
    b: float | None = None
    a: float | None = None

    def __post_init__(self):
        vertical = self.a is not None
        if vertical == (self.m is not None or self.b is not None):
            raise InvalidLine("give either (m, b) or a")
        vals = (self.a,) if vertical else (self.m, self.b)
        if any(v is None or not math.isfinite(v) for v in vals):
            raise InvalidLine(f"line parameters must be finite: {self}")

    @property
    def vertical(self) -> bool:
        return self.a is not None

    def intersections(self) -> tuple[Vec2, Vec2]:
        """``(S, T)``: where the line meets ``y = x - 1`` and ``y = x + 1``."""
        if self.vertical:
            a = self.a
            return (a, a - 1.0), (a, a + 1.0)
        m, b = self.m, self.b
        if m == 1:
            raise InvalidLine("line is parallel to y = x +- 1")
        xs, xt = (-1 - b) / (m - 1), (1 - b) / (m - 1)
        return (xs, m * xs + b), (xt, m * xt + b)


def _check(m: float, b: float) -> None:
    if b == 0:
        raise InvalidLine("line passes through the origin (b = 0)")
    if m == 1:
        raise InvalidLine("line is parallel to y = x +- 1 (m = 1)")


def phor(m_L: float, b_L: float) -> Vec2:
    """The point of ``y = m_L x + b_L`` for which the shifted points
    ``(x +- 1, y)`` are collinear with the origin and ``S`` resp. ``T``."""
    _check(m_L, b_L)
    d = b_L * (m_L - 1)
    return ((m_L - b_L * b_L) / d, (m_L * m_L - b_L * b_L) / d)


def phor_formulas(m_L: float, b_L: float) -> tuple[Vec2, Vec2, Vec2]:
    """The closed form and the two constructions through ``T`` and ``S``."""
    _check(m_L, b_L)
    xt = (1 - b_L) / (m_L - 1)
    xs = (-1 - b_L) / (m_L - 1)
    x2 = (xt * (b_L + 1) + 1) / b_L
    x3 = (xs * (b_L - 1) + 1) / b_L
    return phor(m_L, b_L), (x2, m_L * x2 + b_L), (x3, m_L * x3 + b_L)


def phor_vertical(a_L: float) -> Vec2:
    if a_L == 0:
        raise InvalidLine("vertical line x = 0 passes through the origin")
    return (a_L, a_L - 1.0 / a_L)


def phor_line(line: Line) -> Vec2:
    return phor_vertical(line.a) if line.vertical else phor(line.m, line.b)


def cross_residual(p: Vec2, q: Vec2) -> float:
    """Scaled |cross(p, q)|; 0 iff 0, p, q are collinear.

    Long vectors are normalized, short ones are not: a shifted point that
    lands next to the origin has no well-defined direction in floating point.
    """
    scale = max(1.0, math.hypot(*p)) * max(1.0, math.hypot(*q))
    return abs(p[0] * q[1] - p[1] * q[0]) / scale


def collinearity_residuals(line: Line, p: Vec2 | None = None) -> tuple[float, float]:
    """Residuals for ``0, (x+1, y), S`` and ``0, (x-1, y), T``."""
    if p is None:
        p = phor_line(line)
    S, T = line.intersections()
    return (cross_residual((p[0] + 1, p[1]), S), cross_residual((p[0] - 1, p[1]), T))


class Projections(NamedTuple):
    S_bar: Vec2
    T_bar: Vec2
    nu: float
    same_side: bool


def projections_and_nu(m: float, x_hat: float, y_hat: float,
                       on_line_tol: float = 1e-9) -> Projections:
    """Scaled points ``S_bar``, ``T_bar`` for a point of ``y = m x + 1``.

    ``nu`` is where the line through ``T_bar`` and ``-S_bar`` crosses the
    x-axis (always 1). ``same_side`` says whether both points lie on the
    same side of the x-axis, which happens exactly for ``-1 < m < 1``.
    """
    if m in (-1.0, 1.0):
        raise InvalidInput("slope must differ from +-1")
    if y_hat == 0:
        raise InvalidInput("y_hat must be nonzero")
    if abs(y_hat - (m * x_hat + 1)) > on_line_tol * max(1.0, abs(y_hat)):
        raise InvalidInput(f"({x_hat}, {y_hat}) is not on y = {m} x + 1")
    S = ((x_hat - 1) / (1 + m), y_hat / (1 + m))
    T = ((x_hat + 1) / (1 - m), y_hat / (1 - m))
    Q = (-S[0], -S[1])
    nu = T[0] - T[1] * (Q[0] - T[0]) / (Q[1] - T[1])
    return Projections(S, T, nu, S[1] * T[1] > 0)


def in_set1(p: Vec2, tol: float = 0.0) -> bool:
    """``x + 1 >= y >= x - 1``."""
    x, y = p
    return x + 1 + tol >= y >= x - 1 - tol


def in_set2(p: Vec2, tol: float = 0.0) -> bool:
    """``-x + 1 >= y >= -x - 1``."""
    x, y = p
    return -x + 1 + tol >= y >= -x - 1 - tol
