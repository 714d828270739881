"""Exception hierarchy shared by all kmodes modules."""


class KmodesError(Exception):
    """Base class for all library errors."""


class ValidationError(KmodesError, ValueError):
    """A spec object or argument violates its invariants."""


class DomainError(ValidationError):
    """An evaluation point lies outside the operation's domain."""


class CouplingError(ValidationError):
    """The coupling constant is zero where a coupled relation requires K != 0."""


class GridError(ValidationError):
    """A time/space grid violates its invariants or collides with a mask."""


class NumericalError(KmodesError):
    """Base class for runtime numerical failures."""


class PoleError(NumericalError):
    """Evaluation at a pole of the function (e.g. log-gamma at a nonpositive integer)."""


class DegenerateParameterError(NumericalError):
    """Hypergeometric parameters hit a non-recoverable degenerate configuration."""


class ConvergenceError(NumericalError):
    """A series or continuation failed to converge within the term budget."""


class DivergenceError(NumericalError):
    """The requested value diverges (e.g. 2F1 at z=1 with Re(c-a-b) <= 0)."""


class SingularityError(NumericalError):
    """Evaluation requested inside the exclusion radius of a singular point."""


class IntegrationError(NumericalError):
    """Adaptive integration failed; carries the last successfully reached time."""

    def __init__(self, message: str, last_time: float | None = None):
        super().__init__(message)
        self.last_time = last_time
