"""Exception hierarchy.

Every failure raised by the library derives from :class:`GeometryError`
(itself a ``ValueError``) so callers can catch one type, while the CLI
maps the subclasses onto distinct exit codes.
"""


class GeometryError(ValueError):
    """Base class for all library errors."""


class DomainError(GeometryError):
    """A kernel was evaluated outside its domain."""


class DegenerateError(GeometryError):
    """A triangle, link or dihedral angle collapsed (|cos| >= 1, zero amplitude)."""


class NotRealizableError(GeometryError):
    """A face Gram determinant is non-negative, so no triangle has these lengths."""


class InadmissibleError(GeometryError):
    """A tetrahedron configuration failed one or more admissibility checks."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PerturbationError(GeometryError):
    """A finite-difference perturbation left the admissible region."""


class SolverError(GeometryError):
    """The inverse solver failed; ``best_residual`` is the smallest residual reached."""

    def __init__(self, message, best_residual=float("nan"), lengths=None, iterations=0):
        super().__init__(message)
        self.best_residual = best_residual
        self.lengths = lengths
        self.iterations = iterations


class SamplingError(GeometryError):
    """Rejection sampling ran out of attempts."""
