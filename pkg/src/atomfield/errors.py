"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A field/atom/run specification is malformed or inconsistent."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation
    (pole of a closed form, branch cut, non-positive frequency, ...)."""


class ConvergenceError(RuntimeError):
    """An iterative procedure (Newton search, quadrature refinement)
    failed to converge; the message carries the last iterate."""


class NumericalInstabilityError(RuntimeError):
    """A time-marching solver produced NaN/overflow; the message carries
    the step index."""


class UnphysicalPropagatorError(ValueError):
    """A propagator amplitude exceeded unit magnitude beyond tolerance."""


class ContourError(RuntimeError):
    """A Laplace-inversion contour could not be placed (singularity on or
    right of the contour)."""
