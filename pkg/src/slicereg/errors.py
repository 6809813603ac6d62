"""Exception hierarchy.

Every error raised on purpose by the package derives from `SliceRegError`,
which is itself a `ValueError` so callers that only care about bad input can
catch that.
"""


class SliceRegError(ValueError):
    pass


class DegenerateVector(SliceRegError):
    """Vector part too small to define an imaginary unit."""


class InvalidFrame(SliceRegError):
    """Pair (i, j) is not an orthonormal, co-oriented pair of imaginary units."""


class NotUnit(SliceRegError):
    pass


class OutOfDomain(SliceRegError):
    """Point lies on or outside the ball/disk of definition."""


class TruncationError(SliceRegError):
    """Result would need more coefficients than the configured cap."""


class PathOutsideDomain(SliceRegError):
    pass


class EndpointMismatch(SliceRegError):
    pass


class TraceMismatch(SliceRegError):
    pass


class FrameMismatch(SliceRegError):
    pass


class DegenerateLeadingCoefficient(SliceRegError):
    pass


class IdenticallyZeroComponent(SliceRegError):
    """A slice component polynomial vanishes identically, so it has no finite zero set."""

    def __init__(self, which, message=None):
        self.which = which
        super().__init__(message or f"component {which!r} is identically zero")


class InconsistentData(SliceRegError):
    pass


class NotPSRB(SliceRegError):
    """Coefficient vector parts do not span R^3."""


class NotInPBSRB(SliceRegError):
    """The derivative of the polynomial is not in PSRB."""


class UniquenessViolation(SliceRegError):
    """Both bullet relations hold on distinct slices but the polynomials differ."""
