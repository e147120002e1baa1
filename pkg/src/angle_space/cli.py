"""``angle-space`` command line tool.

Every subcommand prints JSON or CSV on stdout (or ``--out``). Exit codes:
0 success, 1 usage or input error, 2 the Cauchy-Schwarz bound fails for the
requested vectors (the angle is undefined) or a corner witness was found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .angle_core import ratio_to_angle, theta_many, thy_angle
from .axioms import check_an11, check_axioms
from .convexify import generalized_thy_angle, hull_of, sample_sphere
from .corners import (CornerSpec, csb_witness_from_corner, detect_corners,
                      spade_quadratic_P, verify_concave_corner)
from .errors import AngleSpaceError, NoViolationFound, WeightSpecError
from .polar import PolarCoord, polar_decode, polar_encode
from .tolerances import CSB_TOL, ENDPOINT_TOL, STRICT_TOL
from .weights import SphereWeight, Weight, parse_weight

EXIT_OK, EXIT_USAGE, EXIT_CSB = 0, 1, 2
VECTOR_FLAGS = ("--x", "--y", "--b1", "--b2", "--v", "--y-hat", "--x-bar")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass
class CliConfig:
    weight: Weight | None
    seed: int
    n: int | None
    precision: int
    out: str | None


def parse_vector(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    try:
        v = (float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number in {text!r}") from None
    if not all(math.isfinite(c) for c in v):
        raise argparse.ArgumentTypeError(f"non-finite component in {text!r}")
    return v


def _round(obj, digits: int):
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}") if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _round(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v, digits) for v in obj]
    return obj


def _fmt(x: float, digits: int) -> str:
    return "nan" if not math.isfinite(x) else f"{x:.{digits}g}"


# ------------------------------------------------------------------ commands

def cmd_angle(cfg: CliConfig, a) -> tuple[object, int]:
    w = cfg.weight
    if a.generalized:
        res = generalized_thy_angle(w, a.x, a.y, n=cfg.n or 1024)
    else:
        res = thy_angle(w, a.x, a.y)
    value = ratio_to_angle(res.ratio, a.csb_tol) if res.bound else res.value
    out = {
        "weight": w.spec, "x": list(a.x), "y": list(a.y), "generalized": a.generalized,
        "angle_rad": value, "angle_deg": None if value is None else math.degrees(value),
        "product": res.product, "bound": res.bound, "csb_ok": value is not None,
    }
    return out, EXIT_OK if value is not None else EXIT_CSB


def cmd_theta_curve(cfg: CliConfig, a):
    if a.steps < 2:
        raise UsageError("--steps must be at least 2")
    ts = np.linspace(a.t_min, a.t_max, a.steps)
    th, _ = theta_many(cfg.weight, a.x, a.y, ts)
    ok = ~np.isnan(th)
    if not ok.all():
        bad = ts[~ok]
        print(f"warning: angle undefined at {bad.size} t values (first t={bad[0]:g}); "
              "zero-set hit or CSB violation", file=sys.stderr)
    d = np.diff(th[ok])
    if d.size and not np.all(d < -a.strict_tol):
        k = int(np.argmax(d >= -a.strict_tol))
        tv = ts[ok]
        print(f"warning: theta not strictly decreasing between t={tv[k]:g} and "
              f"t={tv[k + 1]:g}", file=sys.stderr)
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["t", "theta_rad"])
    for t, v in zip(ts, th):
        wr.writerow([_fmt(float(t), cfg.precision), _fmt(float(v), cfg.precision)])
    return buf.getvalue(), EXIT_OK


def cmd_axioms(cfg: CliConfig, a):
    rep = check_axioms(cfg.weight, n=cfg.n or 1000, seed=cfg.seed, an11_pairs=a.an11_pairs)
    return rep.to_dict(), EXIT_OK


def _csv_points(points, precision: int) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["x1", "x2"])
    for p in points:
        wr.writerow([_fmt(float(p[0]), precision), _fmt(float(p[1]), precision)])
    return buf.getvalue()


def cmd_sphere(cfg: CliConfig, a):
    w = cfg.weight
    if isinstance(w, SphereWeight):
        pts = list(w.vertices)
    else:
        s = sample_sphere(w, cfg.n or 256)
        pts = s.points
        for r in s.rays:
            print(f"warning: zero-set direction ({r[0]:.6g}, {r[1]:.6g}) is unbounded",
                  file=sys.stderr)
    return _csv_points(pts, cfg.precision), EXIT_OK


def cmd_convexify(cfg: CliConfig, a):
    h = hull_of(cfg.weight, cfg.n or 1024)
    for r in h.lines:
        print(f"warning: hull is unbounded along ({r[0]:.6g}, {r[1]:.6g})", file=sys.stderr)
    return _csv_points(h.vertices, cfg.precision), EXIT_OK


def cmd_polar(cfg: CliConfig, a):
    w = cfg.weight
    if a.mode == "encode":
        if a.v is None:
            raise UsageError("polar encode needs --v")
        p = polar_encode(w, a.b1, a.b2, a.v)
        return p.to_dict(), EXIT_OK
    if a.rho is None or a.alpha is None:
        raise UsageError("polar decode needs --rho and --alpha")
    v = polar_decode(w, a.b1, a.b2, PolarCoord(a.rho, a.alpha))
    return {"v": list(v)}, EXIT_OK


def cmd_corner(cfg: CliConfig, a):
    w = cfg.weight
    given = [a.y_hat, a.x_bar, a.m_minus, a.m_plus]
    if any(v is not None for v in given):
        if any(v is None for v in given):
            raise UsageError("corner spec needs --y-hat, --x-bar, --m-minus and --m-plus")
        specs = [CornerSpec(a.y_hat, a.x_bar, a.eps, a.m_minus, a.m_plus)]
        heuristic = False
    else:
        specs = detect_corners(w)
        heuristic = True
    corners = []
    found = False
    for spec in specs:
        entry = {"spec": spec.to_dict(), "verified": verify_concave_corner(w, spec)}
        if entry["verified"]:
            try:
                wit = csb_witness_from_corner(w, spec)
                P = spade_quadratic_P(w, spec, wit.delta)
                entry["K"] = spec.K(w)
                entry["P_closed"], entry["P_direct"] = P.closed, P.direct
                entry["witness"] = wit.to_dict()
                found = True
            except NoViolationFound as exc:
                entry["witness"] = None
                entry["note"] = str(exc)
        corners.append(entry)
    out = {"weight": w.spec, "heuristic_detection": heuristic, "corners": corners}
    return out, EXIT_CSB if found else EXIT_OK


def cmd_prove_lemmas(cfg: CliConfig, a):
    from .lemmas import run_lemma_checks
    return run_lemma_checks(n=cfg.n or 10_000, seed=cfg.seed), EXIT_OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: $ANGLE_SPACE_SEED or 0)")
    common.add_argument("--n", type=int, default=None, help="sample count")
    common.add_argument("--precision", type=int, default=6,
                        help="significant digits in output (default 6)")
    common.add_argument("--out", default=None, help="write output to this file")

    weighted = argparse.ArgumentParser(add_help=False, parents=[common])
    weighted.add_argument("--weight", required=True,
                          help="lp:<p>, polygon:<r>, axis, hyperbola or sphere-file:<csv>")

    p = _Parser(prog="angle-space", description="Angles in spaces with a homogeneous weight.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser,
                           metavar="{angle,theta-curve,axioms,sphere,convexify,polar,corner}")

    s = sub.add_parser("angle", parents=[weighted], help="Thy angle of two vectors")
    s.add_argument("--x", type=parse_vector, required=True)
    s.add_argument("--y", type=parse_vector, required=True)
    s.add_argument("--generalized", action="store_true",
                   help="measure with the gauge of the convex hull of the unit ball")
    s.add_argument("--csb-tol", type=float, default=CSB_TOL)

    s = sub.add_parser("theta-curve", parents=[weighted], help="CSV of t -> angle(x, y + t x)")
    s.add_argument("--x", type=parse_vector, required=True)
    s.add_argument("--y", type=parse_vector, required=True)
    s.add_argument("--t-min", type=float, default=-10.0)
    s.add_argument("--t-max", type=float, default=10.0)
    s.add_argument("--steps", type=int, default=201)
    s.add_argument("--strict-tol", type=float, default=STRICT_TOL)

    s = sub.add_parser("axioms", parents=[weighted], help="JSON report on An1..An11")
    s.add_argument("--an11-pairs", type=int, default=10)

    sub.add_parser("sphere", parents=[weighted], help="CSV of unit-sphere points")
    sub.add_parser("convexify", parents=[weighted], help="CSV of hull vertices")

    s = sub.add_parser("polar", parents=[weighted], help="polar coordinates")
    s.add_argument("mode", choices=["encode", "decode"])
    s.add_argument("--b1", type=parse_vector, default=(1.0, 0.0))
    s.add_argument("--b2", type=parse_vector, default=(0.0, 1.0))
    s.add_argument("--v", type=parse_vector)
    s.add_argument("--rho", type=float)
    s.add_argument("--alpha", type=float)

    s = sub.add_parser("corner", parents=[weighted],
                       help="verify a concave corner and print the CSB witness")
    s.add_argument("--y-hat", type=parse_vector)
    s.add_argument("--x-bar", type=parse_vector)
    s.add_argument("--eps", type=float, default=1.0)
    s.add_argument("--m-minus", type=float)
    s.add_argument("--m-plus", type=float)

    sub.add_parser("prove-lemmas", parents=[common])
    return p


COMMANDS = {
    "angle": cmd_angle, "theta-curve": cmd_theta_curve, "axioms": cmd_axioms,
    "sphere": cmd_sphere, "convexify": cmd_convexify, "polar": cmd_polar,
    "corner": cmd_corner, "prove-lemmas": cmd_prove_lemmas,
}


def _glue_vectors(argv: list[str]) -> list[str]:
    # "--y -0.1,0.55" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in VECTOR_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("ANGLE_SPACE_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"ANGLE_SPACE_SEED must be an integer, got {env!r}") from None


def main(argv: list[str] | None = None) -> int:
    argv = _glue_vectors(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        weight = parse_weight(args.weight) if hasattr(args, "weight") else None
        cfg = CliConfig(weight, _seed(args.seed), args.n, args.precision, args.out)
        result, code = COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WeightSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AngleSpaceError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not isinstance(result, str):
        result = json.dumps(_round(result, cfg.precision)) + "\n"
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
