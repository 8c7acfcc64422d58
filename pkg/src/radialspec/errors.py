"""Exception hierarchy shared by all modules."""


class RadialSpecError(Exception):
    """Base class for all library errors."""


class InvalidSpec(RadialSpecError, ValueError):
    """Extension parameters outside the supported (l, xi, kappa) range."""


class InvalidInput(RadialSpecError, ValueError):
    """Malformed argument (empty sum, index out of range, ...)."""


class DomainError(RadialSpecError, ValueError):
    """Evaluation point outside the function's domain (r <= 0, lambda <= 0)."""


class SingularityError(RadialSpecError, ValueError):
    """Origin evaluation of a function whose base is not regular at zero."""


class Unsupported(RadialSpecError, ValueError):
    """Requested operation outside the implemented scope (l=3, order>6)."""


class SectorError(RadialSpecError, ValueError):
    """Spectral parameter outside the sector 0 < arg z < pi/3."""


class PoleError(RadialSpecError, ValueError):
    """Resolvent evaluated at (or too close to) the pole of p(z)."""

    def __init__(self, message, pole=None):
        super().__init__(message)
        self.pole = pole


class QuadratureFailure(RadialSpecError, RuntimeError):
    """Adaptive quadrature failed to converge to the requested tolerance."""


class GridError(RadialSpecError, ValueError):
    """Finite-difference stencil does not fit the sample grid."""


class FunctionDomainError(RadialSpecError, ValueError):
    """Functional-calculus map undefined at a point of the spectrum."""


class InternalInconsistency(RadialSpecError, RuntimeError):
    """A cross-check that should hold identically failed; indicates a bug."""
