import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from angle_space.angle_core import euclid_angle, thy_angle
from angle_space.axioms import check_an11, check_basic
from angle_space.convexify import (HullPolygon, conv_weight, convex_hull,
                                   generalized_thy_angle, hull_of, is_normable,
                                   minkowski_functional, sample_sphere)
from angle_space.errors import DegenerateInput, NotNormable, UnboundedDirection, ZeroVector
from angle_space.tolerances import HULL_TOL
from angle_space.weights import (AxisSeminorm, CustomFn, Holder, HyperbolaWeight, Polygon,
                                 find_triangle_violation)

SQUARE = ((-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0))


def test_sample_sphere_l2_four():
    pts = sample_sphere(Holder(2), 8).points
    assert pts[0] == (1.0, 0.0)
    assert pts[2] == pytest.approx((0.0, 1.0), abs=1e-15)
    assert pts[4] == pytest.approx((-1.0, 0.0), abs=1e-15)


def test_sample_sphere_polygon_points_on_hexagon():
    w = Polygon(0.5)
    pts = np.array(sample_sphere(w, 1024).points)
    np.testing.assert_allclose(w.many(pts), 1.0, atol=1e-14)


def test_sample_sphere_axis_rays():
    s = sample_sphere(AxisSeminorm(), 64)
    assert len(s.rays) == 2
    assert all(abs(r[0]) < 1e-12 for r in s.rays)


def test_sample_sphere_finds_off_grid_zero_line():
    w = CustomFn(lambda a, b: abs(a - 2 * b), "tilted")
    s = sample_sphere(w, 100)
    assert s.rays
    r = s.rays[0]
    assert abs(r[0] - 2 * r[1]) < 1e-6


def test_hull_of_polygon_is_square():
    h = hull_of(Polygon(0.5))
    assert h.vertices == SQUARE
    assert h.origin_interior and h.bounded


def test_hull_idempotent_on_square():
    assert convex_hull(SQUARE).vertices == SQUARE


def test_hull_rejects_collinear():
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 1), (2, 2), (3, 3)])
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 1)])


def test_hull_l2_256_gon():
    h = hull_of(Holder(2), 256)
    assert len(h.vertices) == 256
    np.testing.assert_allclose(np.hypot(*np.array(h.vertices).T), 1.0, atol=1e-15)


# quantized so that qhull does not merge near-duplicates
coord = st.integers(-1000, 1000).map(lambda k: k / 100)
pts_strategy = st.lists(st.tuples(coord, coord), min_size=3, max_size=60)


@given(pts_strategy)
def test_hull_matches_scipy(points):
    P = np.array(points)
    try:
        ref = ConvexHull(P)
    except Exception:
        return  # degenerate for qhull too
    if ref.volume < 1e-9:
        return
    h = convex_hull(points)
    ours = np.array(h.vertices)
    assert sorted(map(tuple, ours)) == sorted(map(tuple, P[ref.vertices]))
    # counterclockwise and convex
    d = np.roll(ours, -1, axis=0) - ours
    cross = d[:, 0] * np.roll(d, -1, axis=0)[:, 1] - d[:, 1] * np.roll(d, -1, axis=0)[:, 0]
    assert np.all(cross > 0)


def test_hull_contains_inputs_point_in_polygon():
    from shapely.geometry import Point, Polygon as SPoly
    rng = np.random.default_rng(3)
    P = rng.normal(size=(200, 2))
    poly = SPoly(convex_hull(P).vertices)
    assert all(poly.buffer(1e-12).contains(Point(p)) for p in P)


def test_minkowski_examples():
    h = convex_hull(SQUARE)
    assert minkowski_functional(h, (0, 1)) == 1
    assert minkowski_functional(h, (2, 1)) == 2
    assert minkowski_functional(h, (0, 0)) == 0


def test_minkowski_ray_intersection_oracle():
    # independent oracle: bisect on membership along the ray
    from shapely.geometry import Point, Polygon as SPoly
    h = hull_of(Polygon(0.3))
    poly = SPoly(h.vertices)
    rng = np.random.default_rng(0)
    for v in rng.normal(size=(30, 2)):
        lo, hi = 1e-6, 1e6
        for _ in range(200):
            mid = math.sqrt(lo * hi)
            if poly.covers(Point(v / mid)):
                hi = mid
            else:
                lo = mid
        assert minkowski_functional(h, v) == pytest.approx(hi, rel=1e-9)


def test_minkowski_strict_unbounded():
    h = hull_of(AxisSeminorm())
    assert minkowski_functional(h, (0, 3)) == 0
    with pytest.raises(UnboundedDirection):
        minkowski_functional(h, (0, 3), strict=True)


def test_origin_on_boundary_gives_infinity():
    h = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert not h.origin_interior
    assert minkowski_functional(h, (-1, -1)) == math.inf
    assert minkowski_functional(h, (0.25, 0.25)) == pytest.approx(0.5)


@pytest.mark.parametrize("w", [Holder(1), Holder(2), Holder(0.5), Holder(3), Polygon(0.5),
                               Polygon(2.0), Holder(math.inf)], ids=lambda w: w.spec)
def test_conv_weight_below_weight(w):
    g = conv_weight(w)
    V = np.random.default_rng(1).normal(size=(2000, 2))
    assert np.all(g.many(V) <= w.many(V) * (1 + HULL_TOL))


@pytest.mark.parametrize("w", [Polygon(0.5), Holder(0.5), Holder(0.3), AxisSeminorm()],
                         ids=lambda w: w.spec)
def test_conv_weight_is_seminorm(w):
    assert find_triangle_violation(conv_weight(w)) is None


def test_conv_weight_polygon_is_max_norm():
    g = conv_weight(Polygon(0.5))
    V = np.random.default_rng(2).normal(size=(1000, 2))
    np.testing.assert_allclose(g.many(V), np.max(np.abs(V), axis=1), rtol=1e-15)


def test_conv_weight_l1_unchanged():
    g = conv_weight(Holder(1))
    V = np.random.default_rng(2).normal(size=(1000, 2))
    np.testing.assert_allclose(g.many(V), Holder(1).many(V), rtol=HULL_TOL)


def test_conv_weight_half_is_l1():
    g = conv_weight(Holder(0.5), 512)
    V = np.random.default_rng(2).normal(size=(1000, 2))
    np.testing.assert_allclose(g.many(V), np.abs(V).sum(axis=1), rtol=HULL_TOL)


def test_conv_weight_axis_is_axis():
    g = conv_weight(AxisSeminorm())
    V = np.random.default_rng(2).normal(size=(500, 2))
    np.testing.assert_allclose(g.many(V), np.abs(V[:, 0]), atol=1e-12)


def test_conv_weight_hyperbola_is_zero():
    g = conv_weight(HyperbolaWeight())
    assert g((3, 4)) == 0


def test_hull_refinement_converges_for_l2():
    V = np.random.default_rng(5).normal(size=(2000, 2))
    exact = np.hypot(*V.T)
    errs = [np.max(np.abs(conv_weight(Holder(2), n).many(V) - exact) / exact)
            for n in (64, 128, 256, 512)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    # second order: doubling n cuts the error by about four
    assert all(3 < a / b < 5 for a, b in zip(errs, errs[1:]))


@pytest.mark.parametrize("w,expected", [
    (Polygon(0.5), True), (Polygon(0.1), True), (Polygon(3.0), True), (Holder(2), True),
    (Holder(0.5), True), (AxisSeminorm(), False), (HyperbolaWeight(), False),
], ids=lambda v: getattr(v, "spec", str(v)))
def test_is_normable(w, expected):
    assert is_normable(w) is expected


def test_generalized_examples():
    assert generalized_thy_angle(Polygon(0.5), (1, 0), (0, 1)).value == pytest.approx(
        math.pi / 2, abs=1e-12)
    assert generalized_thy_angle(Holder(1), (1, 0), (1, 1)).value == pytest.approx(
        math.acos(0.75), abs=1e-12)


def test_generalized_l2_is_euclid_within_hull_tol():
    rng = np.random.default_rng(4)
    for x, y in zip(rng.normal(size=(200, 2)), rng.normal(size=(200, 2))):
        if euclid_angle(x, y) < 0.1 or euclid_angle(x, y) > math.pi - 0.1:
            continue
        g = generalized_thy_angle(Holder(2), x, y, n=4096).value
        assert g == pytest.approx(euclid_angle(x, y), abs=HULL_TOL)


def test_generalized_always_defined_for_polygon():
    rng = np.random.default_rng(0)
    w = Polygon(0.5)
    X, Y = rng.normal(size=(500, 2)), rng.normal(size=(500, 2))
    assert all(generalized_thy_angle(w, x, y).ok for x, y in zip(X, Y))
    # while the plain angle is not
    assert generalized_thy_angle(w, (0.1, 0.55), (-0.1, 0.55)).ok
    assert not thy_angle(w, (0.1, 0.55), (-0.1, 0.55)).ok


def test_generalized_errors():
    with pytest.raises(NotNormable):
        generalized_thy_angle(AxisSeminorm(), (1, 0), (1, 1))
    with pytest.raises(ZeroVector):
        generalized_thy_angle(Holder(1), (0, 0), (1, 1))


@pytest.mark.parametrize("w", [Polygon(0.5), Holder(0.5), Polygon(0.2)], ids=lambda w: w.spec)
def test_generalized_angle_space_axioms(w):
    rep = check_basic(w, n=200, seed=1, angle=lambda x, y: generalized_thy_angle(w, x, y))
    assert all(rep.status(f"An{i}") == "pass" for i in range(1, 8))
    r = check_an11(w, (1, 0.1), (0.2, 1), angle=lambda x, y: generalized_thy_angle(w, x, y))
    assert r.passed, r.to_dict()


def test_hull_polygon_immutable():
    h = convex_hull(SQUARE)
    with pytest.raises(Exception):
        h.vertices = ()
    assert isinstance(h, HullPolygon)
