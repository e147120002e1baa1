import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from angle_space.errors import NotStarShaped, WeightSpecError, ZeroSetVector
from angle_space.weights import (AxisSeminorm, CustomFn, Holder, HyperbolaWeight, Polygon,
                                 SphereWeight, find_triangle_violation, homogeneity_defect,
                                 iter_builtin_weights, parse_weight, sign, sphere_from_csv,
                                 validate_homogeneity)

coord = st.floats(-1e3, 1e3, allow_nan=False)
vec = st.tuples(coord, coord)


def test_holder_values():
    assert Holder(1)((3, -4)) == 7
    assert Holder(2)((3, -4)) == 5
    assert Holder(math.inf)((3, -4)) == 4
    assert Holder(3)((1, 1)) == pytest.approx(2 ** (1 / 3), rel=1e-15)


@pytest.mark.parametrize("p", [0.5, 1, 1.5, 2, 3, math.inf])
def test_holder_vectorized_matches_scalar(p):
    rng = np.random.default_rng(1)
    V = rng.normal(size=(200, 2)) * 10.0 ** rng.uniform(-3, 3, (200, 1))
    w = Holder(p)
    np.testing.assert_allclose(w.many(V), [w(v) for v in V], rtol=1e-14)


def test_holder_extreme_magnitudes_do_not_overflow():
    assert Holder(3)((1e200, 1e200)) == pytest.approx(2 ** (1 / 3) * 1e200, rel=1e-14)
    assert Holder(3)((1e-200, 0)) == pytest.approx(1e-200, rel=1e-14)


def test_polygon_half_values():
    w = Polygon(0.5)
    assert w((0, 1)) == 2.0
    assert w((0, 0.5)) == 1.0
    assert w((1, 0)) == 1.0
    assert w((1, 1)) == 1.0
    # on the segment (0, 1/2)-(1, 1)
    assert w((0.1, 0.55)) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9, 1.0, 2.0])
def test_polygon_vertices_have_weight_one(r):
    w = Polygon(r)
    for v in [(0, r), (1, 1), (1, -1), (0, -r), (-1, -1), (-1, 1)]:
        assert w(v) == pytest.approx(1.0, abs=1e-15)


def test_polygon_vectorized_matches_scalar():
    w = Polygon(0.3)
    rng = np.random.default_rng(2)
    V = rng.normal(size=(500, 2))
    np.testing.assert_allclose(w.many(V), [w(v) for v in V], rtol=1e-14)


def test_polygon_convexity_claims():
    assert not Polygon(0.5).claims.is_seminorm
    assert Polygon(1.0).claims.is_norm
    assert Polygon(2.0).claims.is_norm


def test_sphere_weight_rejects_non_star_shaped():
    with pytest.raises(NotStarShaped):
        SphereWeight(((1, 0), (0, 1), (-1, 0), (0, 1), (0, -1)))
    with pytest.raises(NotStarShaped):
        SphereWeight(((1, 0), (2, 0), (0, 1)))


def test_sphere_weight_orientation_independent():
    cw = SphereWeight(((1, 1), (1, -1), (-1, -1), (-1, 1)))
    assert cw((0.3, 0.7)) == pytest.approx(0.7)


def test_sphere_from_csv(tmp_path):
    f = tmp_path / "square.csv"
    f.write_text("# square\n1,1\n-1,1\n-1,-1\n1,-1\n")
    w = sphere_from_csv(str(f))
    assert w((2, 1)) == pytest.approx(2.0)


def test_axis_and_hyperbola():
    assert AxisSeminorm()((-3, 100)) == 3
    assert AxisSeminorm()((0, 5)) == 0
    assert HyperbolaWeight()((4, -9)) == 6


@pytest.mark.parametrize("w", list(iter_builtin_weights()), ids=lambda w: w.spec)
def test_builtin_weights_absolutely_homogeneous(w):
    assert validate_homogeneity(w)


def test_homogeneity_detects_non_homogeneous():
    w = CustomFn(lambda a, b: a * a + b * b, "square")
    assert homogeneity_defect(w) > 1


@pytest.mark.parametrize("p", [0.3, 0.5, 0.9])
def test_triangle_violation_found_for_small_p(p):
    x, y = find_triangle_violation(Holder(p))
    w = Holder(p)
    assert w((x[0] + y[0], x[1] + y[1])) > w(x) + w(y)


@pytest.mark.parametrize("w", [Holder(1), Holder(2), Holder(math.inf), Polygon(2.0),
                               AxisSeminorm()], ids=lambda w: w.spec)
def test_no_triangle_violation_for_seminorms(w):
    assert find_triangle_violation(w) is None


def test_polygon_half_violates_triangle_inequality():
    assert find_triangle_violation(Polygon(0.5)) is not None


@given(vec, st.floats(-1e3, 1e3))
def test_holder_homogeneity_property(v, r):
    for p in (1, 1.5, 2, 3, math.inf):
        w = Holder(p)
        assert w((r * v[0], r * v[1])) == pytest.approx(abs(r) * w(v), rel=1e-12, abs=1e-300)


@given(vec, vec)
def test_holder_triangle_property(x, y):
    for p in (1, 1.5, 2, 3, math.inf):
        w = Holder(p)
        s = (x[0] + y[0], x[1] + y[1])
        assert w(s) <= (w(x) + w(y)) * (1 + 1e-12) + 1e-300


def test_sign_and_zero_set():
    assert sign(Holder(1), (2, 2)) == (0.5, 0.5)
    with pytest.raises(ZeroSetVector):
        sign(AxisSeminorm(), (0, 1))


@pytest.mark.parametrize("spec,expected", [
    ("lp:1", Holder(1)), ("lp:inf", Holder(math.inf)), ("lp:∞", Holder(math.inf)),
    ("lp:1.5", Holder(1.5)), ("axis", AxisSeminorm()), ("hyperbola", HyperbolaWeight()),
])
def test_parse_weight(spec, expected):
    assert parse_weight(spec) == expected


def test_parse_polygon():
    assert parse_weight("polygon:0.5").vertices == Polygon(0.5).vertices


@pytest.mark.parametrize("spec,pos", [("lp:x", 3), ("lp:", 3), ("lp:-1", 3), ("circle", 0),
                                      ("axis:2", 4), ("polygon:0", 8)])
def test_parse_errors_carry_position(spec, pos):
    with pytest.raises(WeightSpecError) as ei:
        parse_weight(spec)
    assert ei.value.position == pos


def test_as_vec_validation():
    with pytest.raises(ValueError):
        Holder(1).eval((1, 2, 3))
    with pytest.raises(ValueError):
        Holder(1).eval((math.nan, 0))
