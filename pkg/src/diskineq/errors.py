"""Exception types raised across the package."""


class DiskIneqError(Exception):
    """Base class for all package errors."""


class NotRealValued(DiskIneqError):
    pass


class NonFiniteSample(DiskIneqError):
    pass


class NoConvergence(DiskIneqError):
    """Adaptive quadrature hit its node cap.

    The last observed increment is kept on ``last_increment`` so callers can
    decide whether the partial result is still usable.
    """

    def __init__(self, message, last_increment=float("nan"), value=float("nan")):
        super().__init__(message)
        self.last_increment = last_increment
        self.value = value


class OutOfRange(DiskIneqError, ValueError):
    pass


class PreconditionFailed(DiskIneqError, ValueError):
    pass


class DegenerateZero(DiskIneqError, ZeroDivisionError):
    pass
