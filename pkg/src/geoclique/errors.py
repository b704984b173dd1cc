"""Exception types shared across the package."""


class GeocliqueError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameter(GeocliqueError, ValueError):
    """A model or operation parameter is outside its documented domain."""


class OutOfDomain(GeocliqueError, ValueError):
    """A point or region leaves the support of the distance model."""


class EndpointCollision(GeocliqueError):
    """Two segments share an endpoint, so pair geometry is undefined."""


class NotIndependent(GeocliqueError):
    """The segment pair fails the independence predicate."""


class NoCrossing(GeocliqueError):
    """The two segments do not meet; for independent inputs this is a
    counterexample to the crossing guarantee rather than a numerical issue."""


class NumericalDegeneracy(GeocliqueError):
    """A measure-zero configuration (collinear or coincident geometry) that
    the pair primitives refuse to resolve."""


class MalformedLine(GeocliqueError):
    """An edge-list line that cannot be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, text: str):
        self.line_no = line_no
        self.text = text
        super().__init__(f"line {line_no}: cannot parse {text!r}")


class InvalidVertex(GeocliqueError, IndexError):
    """A vertex id outside the graph's dense id range."""


class TooLarge(GeocliqueError):
    """The instance exceeds a documented size cap for the requested operation."""


class CountOverflow(GeocliqueError):
    """A clique count exceeded the 128-bit counter range.

    Counting saturates and sets the ``overflowed`` flag on the returned
    statistics rather than raising; this class exists for callers who want
    to escalate that flag into an error.
    """


class ConditionUnmet(GeocliqueError):
    """A bound's hypothesis fails (for example n < 4t), so the bound is undefined."""


class InvalidConstruction(GeocliqueError):
    """Planting-region radii violate their ordering constraints for these
    parameters, so no region family exists."""


class RejectionExhausted(GeocliqueError):
    """Rejection sampling hit its attempt budget without an accepted sample."""

    def __init__(self, attempts: int):
        self.attempts = attempts
        super().__init__(f"no admissible sample after {attempts} attempts")


class NotPairwiseIndependent(GeocliqueError):
    """A segment family required to be pairwise independent is not."""
