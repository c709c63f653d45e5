"""Exception hierarchy shared across the package."""


class LoopforgeError(Exception):
    """Base class for all package errors."""


class MalformedInputError(LoopforgeError):
    """Unknown generator token / malformed serialized data."""


class UnsupportedPresentationError(LoopforgeError):
    """Operation requires a different presentation kind."""


class TrivialElementError(LoopforgeError):
    """The trivial element was passed where a nontrivial one is required."""


class DomainError(LoopforgeError):
    """Argument outside the documented domain (m >= 1, delta >= 0, ...)."""


class GeneralPositionError(LoopforgeError):
    """Curve violates general position (tangency, triple point, basepoint)."""


class TransversalityError(LoopforgeError):
    """Curve touches a gate endpoint or runs along a gate."""


class ResourceLimitError(LoopforgeError):
    """A configured enumeration cap was exceeded."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InapplicableTheoremError(LoopforgeError):
    """Hypotheses of the evaluated bound are not met (e.g. si = 0)."""
