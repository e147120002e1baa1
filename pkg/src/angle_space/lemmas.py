"""Batch checks of the plane-geometry facts, as one JSON-able summary."""

from __future__ import annotations

import math

import numpy as np

from .angle_core import h_minus, h_plus
from .plane_geometry import (Line, collinearity_residuals, cross_residual, in_set1,
                             in_set2, phor, phor_formulas, projections_and_nu)
from .weights import Holder

RESIDUAL_TOL = 1e-12


def _valid_mb(rng, n):
    m = rng.uniform(-5, 5, 3 * n)
    b = rng.uniform(-5, 5, 3 * n)
    keep = (np.abs(m - 1) >= 0.1) & (np.abs(b) >= 0.1)
    return m[keep][:n], b[keep][:n]


def phor_residuals(n: int, seed: int) -> dict:
    rng = np.random.default_rng([seed, 0])
    m, b = _valid_mb(rng, n)
    coll = agree = 0.0
    for mi, bi in zip(m, b):
        f = phor_formulas(float(mi), float(bi))
        scale = max(1.0, math.hypot(*f[0]))
        agree = max(agree, *(math.hypot(f[k][0] - f[0][0], f[k][1] - f[0][1]) / scale
                             for k in (1, 2)))
        coll = max(coll, *collinearity_residuals(Line(m=float(mi), b=float(bi))))
    a = rng.uniform(-5, 5, 3 * n)
    a = a[np.abs(a) >= 0.1][:n]
    for ai in a:
        coll = max(coll, *collinearity_residuals(Line(a=float(ai))))
    return {"samples": int(len(m) + len(a)), "max_collinearity_residual": coll,
            "max_formula_disagreement": agree}


def projection_residuals(n: int, seed: int) -> dict:
    rng = np.random.default_rng([seed, 1])
    nu_err = coll = 0.0
    side_mismatch = 0
    used = 0
    while used < n:
        m = rng.uniform(-5, 5)
        x = rng.uniform(-5, 5)
        y = m * x + 1
        if abs(abs(m) - 1) < 0.1 or abs(y) < 0.1:
            continue
        p = projections_and_nu(m, x, y)
        used += 1
        nu_err = max(nu_err, abs(p.nu - 1))
        T, S = p.T_bar, p.S_bar
        coll = max(coll, cross_residual((T[0] - 1, T[1]), (-S[0] - 1, -S[1])))
        if p.same_side != ((1 - m) * (1 + m) > 0):
            side_mismatch += 1
    return {"samples": used, "max_nu_error": nu_err, "max_collinearity_residual": coll,
            "side_predicate_mismatches": side_mismatch}


def set_containment(n: int = 2048) -> dict:
    out = {}
    phi = 2 * np.pi * np.arange(n) / n
    U = np.column_stack([np.cos(phi), np.sin(phi)])
    for p in (1.0, 1.5, 2.0, 3.0, math.inf):
        w = Holder(p)
        P = U / w.many(U)[:, None]
        outside = sum(1 for q in P if not (in_set1(tuple(q), 1e-12) or in_set2(tuple(q), 1e-12)))
        out[w.spec] = outside
    return {"samples_per_weight": n, "points_outside": out}


def linf_constancy(points: int = 101) -> dict:
    w = Holder(math.inf)
    x, y = (1.0, 0.0), (0.0, 1.0)
    dp = max(abs(h_plus(w, x, y, float(t)) - 1) for t in np.linspace(-1, 0, points))
    dm = max(abs(h_minus(w, x, y, float(t)) - 1) for t in np.linspace(0, 1, points))
    return {"points": points, "h_plus_max_dev": dp, "h_minus_max_dev": dm}


def run_lemma_checks(n: int = 10_000, seed: int = 0) -> dict:
    a = phor_residuals(n, seed)
    b = projection_residuals(n, seed)
    lem = set_containment()
    lin = linf_constancy()
    example = phor(-1.0, 5.0)
    ok = (example == (2.6, 2.4)
          and a["max_collinearity_residual"] < RESIDUAL_TOL
          and a["max_formula_disagreement"] < RESIDUAL_TOL
          and b["max_nu_error"] < RESIDUAL_TOL
          and b["max_collinearity_residual"] < RESIDUAL_TOL
          and b["side_predicate_mismatches"] == 0
          and not any(lem["points_outside"].values())
          and lin["h_plus_max_dev"] < RESIDUAL_TOL and lin["h_minus_max_dev"] < RESIDUAL_TOL)
    return {"ok": ok, "phor_example": list(example), "phor": a, "projections": b,
            "set_containment": lem, "linf_constancy": lin}
