"""Exception types raised by the angle_space package."""


class AngleSpaceError(Exception):
    """Base class for all package errors."""


class ZeroSetVector(AngleSpaceError, ValueError):
    """A vector has weight zero where a nonzero weight is required."""


class ZeroVector(AngleSpaceError, ValueError):
    """The zero vector was passed where a nonzero vector is required."""


class NotBracketed(AngleSpaceError):
    """Bracket expansion failed to straddle the requested angle."""


class MonotonicityViolation(AngleSpaceError):
    """Theta was observed increasing inside a bisection bracket."""


class DegenerateInput(AngleSpaceError, ValueError):
    """Geometric input is degenerate (e.g. all points collinear)."""


class UnboundedDirection(AngleSpaceError):
    """A ray from the origin never leaves the (unbounded) hull."""


class NotNormable(AngleSpaceError):
    """The hull gauge of the weight is not a norm."""


class InternalInconsistency(AngleSpaceError):
    """Two independent evaluation routes disagree."""


class NoViolationFound(AngleSpaceError):
    """No CSB violation could be produced from the given corner data."""


class InvalidLine(AngleSpaceError, ValueError):
    pass


class InvalidInput(AngleSpaceError, ValueError):
    pass


class NotStarShaped(AngleSpaceError, ValueError):
    """A sphere polyline is not star-shaped about the origin."""


class WeightSpecError(AngleSpaceError, ValueError):
    """A weight spec string could not be parsed."""

    def __init__(self, message, spec="", position=0):
        super().__init__(f"{message} (at position {position} in {spec!r})")
        self.spec = spec
        self.position = position
