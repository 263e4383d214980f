"""Exception hierarchy shared by every module."""


class IasslError(Exception):
    """Base class for all library errors."""


class DomainError(IasslError, ValueError):
    """An input lies outside the domain an operation is defined on."""


class CapacityError(IasslError):
    """A configured size guard would be exceeded."""


class RepresentationError(IasslError, OverflowError):
    """A sum set does not fit in the chosen value bound."""


class IncompleteLabelingError(IasslError):
    """An operation needs every vertex to carry a label."""


class PreconditionError(IasslError):
    """A documented precondition of an operation does not hold."""


class ConstructionError(IasslError, RuntimeError):
    """A constructed graph failed its post-hoc verification.

    The offending trace is attached as ``trace``.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
