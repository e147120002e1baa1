"""Angles in spaces with a homogeneous weight (no triangle inequality needed)."""

from .angle_core import (AngleResult, euclid_angle, h_minus, h_plus, spade_product,
                         theta, thy_angle)
from .errors import *  # noqa: F401,F403
from .weights import (AxisSeminorm, CustomFn, Holder, HyperbolaWeight, Polygon,
                      SphereWeight, Weight, parse_weight, sign)

__all__ = [
    "AngleResult", "euclid_angle", "h_minus", "h_plus", "spade_product", "theta",
    "thy_angle", "AxisSeminorm", "CustomFn", "Holder", "HyperbolaWeight", "Polygon",
    "SphereWeight", "Weight", "parse_weight", "sign",
]
