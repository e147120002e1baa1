"""Sample-based checks of the angle-space axioms An1..An11.

All checks are deterministic given ``(weight, seed, n)``: every check draws
from its own generator ``default_rng([seed, stream])``. A failing entry
always carries a witness that reproduces the failure when fed back through
the angle function.

An1 (continuity) is a heuristic: for each sample the angle difference under
a perturbation of size ``delta_k = delta_0 * 2**-k`` must keep shrinking at
the finest level (``d_K <= 0.75 d_{K-1} + noise``). A jump at ``x`` keeps
``d_k`` constant and is flagged; Lipschitz or Hoelder behaviour passes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .angle_core import AngleResult, spade_ratio_many, theta_many, thy_angle_many
from .errors import InvalidInput, ZeroSetVector
from .tolerances import (ADDITIVITY_TOL, AXIOM_TOL, CSB_TOL, ENDPOINT_TOL,
                         STRICT_TOL, ZERO_TOL)
from .weights import Vec2, Weight, as_vec

AngleFn = Callable[[Vec2, Vec2], AngleResult]

REQUIRED = {"An1", "An2", "An3", "An4", "An5"}
AXIOM_IDS = [f"An{i}" for i in range(1, 12)]

# stream ids for per-check generators
_S_BASIC, _S_ADD, _S_AN11, _S_CSB, _S_EUCLID = range(5)


# ------------------------------------------------------------------ reports

@dataclass
class AxiomEntry:
    id: str
    status: str  # "pass" | "fail" | "not_applicable"
    samples: int
    witness: dict | None = None
    details: dict | None = None

    @property
    def required(self) -> bool:
        return self.id in REQUIRED

    def to_dict(self) -> dict:
        d = {"id": self.id, "status": self.status, "samples": self.samples,
             "required": self.required}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.details is not None:
            d["details"] = self.details
        return d


@dataclass
class AxiomReport:
    weight: str
    seed: int
    entries: dict[str, AxiomEntry] = field(default_factory=dict)

    def __getitem__(self, axiom_id: str) -> AxiomEntry:
        return self.entries[axiom_id]

    def status(self, axiom_id: str) -> str:
        return self.entries[axiom_id].status

    def add(self, entry: AxiomEntry) -> None:
        self.entries[entry.id] = entry

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        for e in other.entries.values():
            self.add(e)
        return self

    def to_dict(self) -> dict:
        ordered = sorted(self.entries.values(), key=lambda e: int(e.id[2:]))
        return {"weight": self.weight, "seed": self.seed,
                "axioms": [e.to_dict() for e in ordered]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _vec(v) -> list[float]:
    return [float(v[0]), float(v[1])]


# ------------------------------------------------------------------ sampling

class DirectionSampler:
    """Random vectors with uniform direction and log-uniform Euclidean length.

    Directions where the weight of the Euclidean unit vector is below
    ``min_weight`` are rejected, which keeps samples away from the zero-set.
    """

    def __init__(self, w: Weight, r_range=(0.1, 10.0), min_weight: float = 0.25):
        self.w = w
        self.r_range = r_range
        self.min_weight = min_weight

    def __call__(self, rng: np.random.Generator, n: int) -> np.ndarray:
        out = np.empty((0, 2))
        lo, hi = np.log(self.r_range[0]), np.log(self.r_range[1])
        for _ in range(50):
            m = max(2 * (n - len(out)), 16)
            phi = rng.uniform(0.0, 2 * np.pi, m)
            U = np.column_stack([np.cos(phi), np.sin(phi)])
            U = U[self.w.many(U) >= self.min_weight]
            r = np.exp(rng.uniform(lo, hi, len(U)))
            out = np.vstack([out, U * r[:, None]])
            if len(out) >= n:
                return out[:n]
        raise InvalidInput(f"could not sample vectors outside the zero-set of {self.w.spec}")


def independent_pairs(sampler, rng, n: int, min_sin: float = 0.05):
    """``n`` pairs whose Euclidean directions differ by at least asin(min_sin)."""
    X = np.empty((0, 2))
    Y = np.empty((0, 2))
    for _ in range(50):
        m = 2 * (n - len(X)) + 8
        A, B = sampler(rng, m), sampler(rng, m)
        s = np.abs(A[:, 0] * B[:, 1] - A[:, 1] * B[:, 0])
        s /= np.hypot(*A.T) * np.hypot(*B.T)
        keep = s >= min_sin
        X = np.vstack([X, A[keep]])
        Y = np.vstack([Y, B[keep]])
        if len(X) >= n:
            return X[:n], Y[:n]
    raise InvalidInput("could not sample linearly independent pairs")


def unit_pairs(w: Weight, rng, n: int, min_sin: float = 0.3, sampler=None):
    """Independent pairs scaled to unit weight.

    Theta's scale in ``t`` is set by the pair; unit weights and a clear
    angular separation keep Theta resolvable across the fixed t-grid.
    """
    X, Y = independent_pairs(sampler or DirectionSampler(w), rng, n, min_sin)
    return X / w.many(X)[:, None], Y / w.many(Y)[:, None]


def _angle_batch(w: Weight, angle: AngleFn | None):
    """Row-wise angle evaluator; NaN marks undefined angles."""
    if angle is None:
        return lambda X, Y: thy_angle_many(w, X, Y)

    def batch(X, Y):
        X = np.asarray(X, dtype=float).reshape(-1, 2)
        Y = np.asarray(Y, dtype=float).reshape(-1, 2)
        out = np.empty(len(X))
        for i, (x, y) in enumerate(zip(X, Y)):
            try:
                v = angle(tuple(x), tuple(y)).value
            except ZeroSetVector:
                v = None
            out[i] = np.nan if v is None else v
        return out

    return batch


def _csb_witness(w, x, y) -> dict:
    r, nx, ny = spade_ratio_many(w, [x], [y])
    return {"x": _vec(x), "y": _vec(y), "product": float(r[0] * nx[0] * ny[0]),
            "bound": float(nx[0] * ny[0])}


# ------------------------------------------------------------------ An1..An7

def check_basic(w: Weight, n: int = 1000, seed: int = 0, sampler=None,
                angle: AngleFn | None = None, levels: int = 8,
                noise: float = 1e-7) -> AxiomReport:
    """Check An1..An7 on ``n`` random pairs."""
    report = AxiomReport(w.spec, seed)
    rng = np.random.default_rng([seed, _S_BASIC])
    sampler = sampler or DirectionSampler(w)
    try:
        X, Y = sampler(rng, n), sampler(rng, n)
    except InvalidInput:
        for i in range(1, 8):
            report.add(AxiomEntry(f"An{i}", "not_applicable", 0))
        return report
    ang = _angle_batch(w, angle)
    A0 = ang(X, Y)

    # An1: defined everywhere, plus the continuity probe
    bad = np.flatnonzero(np.isnan(A0))
    if bad.size:
        i = bad[0]
        report.add(AxiomEntry("An1", "fail", n, {
            "reason": "angle undefined (CSB violation)", **_csb_witness(w, X[i], Y[i])}))
    else:
        phi = rng.uniform(0, 2 * np.pi, n)
        U = np.column_stack([np.cos(phi), np.sin(phi)])
        delta0 = 1e-3 * np.hypot(*X.T)
        prev = cur = None
        for k in range(levels + 1):
            dk = delta0 * 2.0**-k
            prev, cur = cur, np.abs(ang(X + dk[:, None] * U, Y) - A0)
        final = np.nan_to_num(cur, nan=np.inf)
        fails = np.flatnonzero(~(final <= 0.75 * np.nan_to_num(prev, nan=np.inf) + noise))
        if fails.size:
            i = fails[0]
            dK = float(delta0[i] * 2.0**-levels)
            report.add(AxiomEntry("An1", "fail", n, {
                "x": _vec(X[i]), "y": _vec(Y[i]), "direction": _vec(U[i]),
                "delta": dK, "angle": float(A0[i]), "jump": float(cur[i]),
                "reason": "angle difference does not shrink with the perturbation"}))
        else:
            dK = delta0 * 2.0**-levels
            report.add(AxiomEntry("An1", "pass", n, details={
                "lipschitz_estimate": float(np.max(cur / dK))}))

    def pointwise(aid, lhs, rhs, build, tol=AXIOM_TOL):
        gap = np.abs(lhs - rhs)
        idx = np.flatnonzero(~(gap <= tol))
        if idx.size:
            i = idx[0]
            wit = build(i)
            wit.update(lhs=float(lhs[i]), rhs=float(rhs[i]), gap=float(gap[i]))
            report.add(AxiomEntry(aid, "fail", n, wit))
        else:
            report.add(AxiomEntry(aid, "pass", n))

    pointwise("An2", ang(X, X), np.zeros(n), lambda i: {"x": _vec(X[i])})
    pointwise("An3", ang(-X, X), np.full(n, np.pi), lambda i: {"x": _vec(X[i])})
    pointwise("An4", A0, ang(Y, X), lambda i: {"x": _vec(X[i]), "y": _vec(Y[i])})
    r = np.exp(rng.uniform(np.log(1e-3), np.log(1e3), n))
    s = np.exp(rng.uniform(np.log(1e-3), np.log(1e3), n))
    pointwise("An5", ang(X * r[:, None], Y * s[:, None]), A0,
              lambda i: {"x": _vec(X[i]), "y": _vec(Y[i]), "r": float(r[i]), "s": float(s[i])})
    pointwise("An6", ang(-X, -Y), A0, lambda i: {"x": _vec(X[i]), "y": _vec(Y[i])})
    pointwise("An7", A0 + ang(-X, Y), np.full(n, np.pi),
              lambda i: {"x": _vec(X[i]), "y": _vec(Y[i])})
    return report


# ------------------------------------------------------------------ An8..An10

def check_additivity(w: Weight, n: int = 1000, seed: int = 0, sampler=None,
                     angle: AngleFn | None = None) -> AxiomReport:
    """Check An8..An10; the unit pair (1,0), (0,1) is always tried first."""
    report = AxiomReport(w.spec, seed)
    rng = np.random.default_rng([seed, _S_ADD])
    sampler = sampler or DirectionSampler(w)
    try:
        X = np.vstack([[1.0, 0.0], sampler(rng, n)])
        Y = np.vstack([[0.0, 1.0], sampler(rng, n)])
    except InvalidInput:
        for i in (8, 9, 10):
            report.add(AxiomEntry(f"An{i}", "not_applicable", 0))
        return report
    ang = _angle_batch(w, angle)
    S, D = X + Y, X - Y
    a_xy = ang(X, Y)
    terms = {
        "An8": (ang(X, S) + ang(S, Y), a_xy, ("x, x+y", "x+y, y")),
        "An9": (a_xy + ang(-X, -D) + ang(-Y, D), np.full(len(X), np.pi), None),
        "An10": (ang(Y, -D) + ang(X, D), ang(-X, Y), None),
    }
    for aid, (lhs, rhs, _) in terms.items():
        valid = ~(np.isnan(lhs) | np.isnan(rhs))
        # pairs whose sum/difference lands in the zero-set are skipped
        used = int(valid.sum())
        if used == 0:
            report.add(AxiomEntry(aid, "not_applicable", 0))
            continue
        gap = np.where(valid, np.abs(lhs - rhs), 0.0)
        idx = np.flatnonzero(gap > ADDITIVITY_TOL)
        if idx.size:
            i = idx[0]
            report.add(AxiomEntry(aid, "fail", used, {
                "x": _vec(X[i]), "y": _vec(Y[i]), "lhs": float(lhs[i]),
                "rhs": float(rhs[i]), "gap": float(lhs[i] - rhs[i])}))
        else:
            report.add(AxiomEntry(aid, "pass", used))
    return report


# ------------------------------------------------------------------ An11

def standard_grid(t_max: float = 1e6, core: float = 10.0, per_unit: int = 40) -> np.ndarray:
    """Symmetric grid: linear core ``k / per_unit`` on [-core, core] plus
    powers of two out to ``t_max``.

    Tail points double at each step so that consecutive Theta values stay
    distinguishable in double precision all the way out to ``t_max``.
    """
    k = int(round(core * per_unit))
    lin = np.arange(-k, k + 1) / per_unit
    tail = [2.0**j for j in range(1, 64) if core < 2.0**j < t_max] + [t_max]
    tail = np.array(tail)
    return np.concatenate([-tail[::-1], lin, tail])


@dataclass
class An11Result:
    status: str
    x: Vec2
    y: Vec2
    grid_size: int
    monotone_violations: list = field(default_factory=list)
    plateaus: list = field(default_factory=list)
    endpoint_gap: float = math.nan
    zero_set_hits: list = field(default_factory=list)
    csb_violations: list = field(default_factory=list)
    largest_jump: dict | None = None
    ts: np.ndarray | None = field(default=None, repr=False)
    thetas: np.ndarray | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, limit: int = 5) -> dict:
        return {
            "status": self.status, "x": _vec(self.x), "y": _vec(self.y),
            "grid_size": self.grid_size,
            "monotone_violations": self.monotone_violations[:limit],
            "n_monotone_violations": len(self.monotone_violations),
            "plateaus": self.plateaus[:limit],
            "endpoint_gap": self.endpoint_gap,
            "zero_set_hits": self.zero_set_hits[:limit],
            "n_zero_set_hits": len(self.zero_set_hits),
            "n_csb_violations": len(self.csb_violations),
            "largest_jump": self.largest_jump,
        }


def check_an11(w: Weight, x, y, grid=None, angle: AngleFn | None = None,
               strict_tol: float = STRICT_TOL, endpoint_tol: float = ENDPOINT_TOL) -> An11Result:
    """Check that t -> angle(x, y + t x) is a decreasing bijection onto (0, pi).

    Fails on any increase beyond ``strict_tol``, on a flat stretch spanning
    two or more grid steps, on zero-set hits, on undefined angles, or when
    the end values miss pi / 0 by ``endpoint_tol`` or more.
    """
    x, y = as_vec(x), as_vec(y)
    for name, v in (("x", x), ("y", y)):
        if w(v) <= ZERO_TOL:
            raise ZeroSetVector(f"{name} = {v} lies in the zero-set of {w.spec}")
    if abs(x[0] * y[1] - x[1] * y[0]) <= 1e-12 * math.hypot(*x) * math.hypot(*y):
        raise InvalidInput(f"{x} and {y} are linearly dependent")
    ts = standard_grid() if grid is None else np.asarray(grid, dtype=float)

    if angle is None:
        th, ratio = theta_many(w, x, y, ts)
        zero = np.isnan(ratio)
    else:
        th = np.empty(ts.size)
        zero = np.zeros(ts.size, dtype=bool)
        for i, t in enumerate(ts):
            z = (y[0] + t * x[0], y[1] + t * x[1])
            try:
                v = angle(x, z).value
            except ZeroSetVector:
                v, zero[i] = None, True
            th[i] = np.nan if v is None else v
    undefined = np.isnan(th) & ~zero

    res = An11Result("pass", x, y, int(ts.size), ts=ts, thetas=th)
    res.zero_set_hits = [float(t) for t in ts[zero]]
    res.csb_violations = [float(t) for t in ts[undefined]]

    ok = ~np.isnan(th)
    tv, hv = ts[ok], th[ok]
    if hv.size >= 2:
        d = np.diff(hv)
        for i in np.flatnonzero(d > strict_tol):
            res.monotone_violations.append(
                {"t0": float(tv[i]), "t1": float(tv[i + 1]),
                 "theta0": float(hv[i]), "theta1": float(hv[i + 1])})
        flat = np.abs(d) <= strict_tol
        i = 0
        while i < flat.size:
            if flat[i]:
                j = i
                while j + 1 < flat.size and flat[j + 1]:
                    j += 1
                if j > i:
                    res.plateaus.append({"t0": float(tv[i]), "t1": float(tv[j + 1]),
                                         "theta": float(hv[i])})
                i = j + 1
            else:
                i += 1
        k = int(np.argmax(np.abs(d)))
        res.largest_jump = {"t0": float(tv[k]), "t1": float(tv[k + 1]),
                            "theta0": float(hv[k]), "theta1": float(hv[k + 1])}
    lo = th[0] if ok[0] else np.nan
    hi = th[-1] if ok[-1] else np.nan
    res.endpoint_gap = float(max(abs(lo - np.pi), abs(hi))) if ok[0] and ok[-1] else math.inf

    if (res.monotone_violations or res.plateaus or res.zero_set_hits
            or res.csb_violations or not res.endpoint_gap < endpoint_tol):
        res.status = "fail"
    return res


def check_an11_sampled(w: Weight, n_pairs: int = 10, seed: int = 0, sampler=None,
                       angle: AngleFn | None = None, probes=None) -> AxiomEntry:
    """Run :func:`check_an11` on probe pairs plus random independent pairs."""
    rng = np.random.default_rng([seed, _S_AN11])
    sampler = sampler or DirectionSampler(w)
    pairs: list[tuple[Vec2, Vec2]] = list(probes if probes is not None else
                                          [((1.0, 0.0), (0.0, 1.0)), ((1.0, 0.0), (1.0, 1.0))])
    try:
        X, Y = unit_pairs(w, rng, n_pairs, sampler=sampler)
        pairs += [(tuple(a), tuple(b)) for a, b in zip(X, Y)]
    except InvalidInput:
        pass
    used = 0
    for x, y in pairs:
        try:
            res = check_an11(w, x, y, angle=angle)
        except (ZeroSetVector, InvalidInput):
            continue
        used += 1
        if not res.passed:
            return AxiomEntry("An11", "fail", used, res.to_dict())
    return AxiomEntry("An11", "pass" if used else "not_applicable", used)


# ------------------------------------------------------------------ CSB scan

@dataclass
class CSBScan:
    samples: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def csb_scan(w: Weight, n: int = 10_000, seed: int = 0, sampler=None,
             corners=None, keep: int = 100) -> CSBScan:
    """Look for pairs with ``|<x|y>| > w(x) w(y) (1 + csb_tol)``.

    A quarter of the budget goes to pairs straddling concave corners
    (user-supplied ``CornerSpec`` list, or auto-detected); violations live in
    small neighbourhoods of such corners.
    """
    from .corners import csb_witness_from_corner, detect_corners
    from .errors import NoViolationFound

    rng = np.random.default_rng([seed, _S_CSB])
    sampler = sampler or DirectionSampler(w)
    if corners is None:
        corners = detect_corners(w)
    n_corner = n // 4 if corners else 0
    blocks_x, blocks_y = [], []
    for c in corners:
        try:
            wit = csb_witness_from_corner(w, c)
            blocks_x.append(np.array([wit.u]))
            blocks_y.append(np.array([wit.v]))
        except NoViolationFound:
            pass
    if corners and n_corner:
        per = max(n_corner // len(corners), 1)
        for c in corners:
            s = np.array(c.sign_y(w))
            xb = np.array(c.sign_x(w))
            d = rng.uniform(0.0, 1.0, per)[:, None] * c.eps
            j1 = rng.normal(scale=1e-3, size=(per, 2))
            j2 = rng.normal(scale=1e-3, size=(per, 2))
            blocks_x.append(s + d * (xb + c.m_plus * s) + j1 * d)
            blocks_y.append(s + d * (-xb - c.m_minus * s) + j2 * d)
    m = n - sum(len(b) for b in blocks_x)
    if m > 0:
        blocks_x.append(sampler(rng, m))
        blocks_y.append(sampler(rng, m))
    X, Y = np.vstack(blocks_x)[:n], np.vstack(blocks_y)[:n]
    r, nx, ny = spade_ratio_many(w, X, Y)
    idx = np.flatnonzero(np.abs(r) > 1.0 + CSB_TOL)
    out = CSBScan(len(X))
    for i in idx[:keep]:
        out.violations.append({"x": _vec(X[i]), "y": _vec(Y[i]),
                               "product": float(r[i] * nx[i] * ny[i]),
                               "bound": float(nx[i] * ny[i])})
    return out


# ------------------------------------------------------------------ aggregate

def euclid_agreement(w: Weight, n: int = 1000, seed: int = 0,
                     angle: AngleFn | None = None) -> float:
    """Largest |angle - euclidean angle| over random pairs."""
    rng = np.random.default_rng([seed, _S_EUCLID])
    sampler = DirectionSampler(w)
    X, Y = sampler(rng, n), sampler(rng, n)
    a = _angle_batch(w, angle)(X, Y)
    cross = X[:, 0] * Y[:, 1] - X[:, 1] * Y[:, 0]
    dot = np.einsum("ij,ij->i", X, Y)
    e = np.arctan2(np.abs(cross), dot)
    return float(np.max(np.abs(a - e)))


def check_axioms(w: Weight, n: int = 1000, seed: int = 0, sampler=None,
                 angle: AngleFn | None = None, an11_pairs: int = 10) -> AxiomReport:
    """Full An1..An11 report."""
    report = check_basic(w, n, seed, sampler, angle)
    report.merge(check_additivity(w, n, seed, sampler, angle))
    report.add(check_an11_sampled(w, an11_pairs, seed, sampler, angle))
    return report
