"""Exception hierarchy shared by every module."""


class QdomError(ValueError):
    """Base class for all errors raised by this package."""


class OutOfRange(QdomError):
    pass


class SelfLoop(QdomError):
    pass


class DuplicateEdge(QdomError):
    pass


class EdgeAbsent(QdomError):
    pass


class EdgePresent(QdomError):
    pass


class EmptyResult(QdomError):
    pass


class MalformedGraph6(QdomError):
    pass


class InvalidSpec(QdomError):
    pass


class ResultTooLarge(QdomError):
    pass


class NoConvergence(QdomError):
    pass


class DimensionMismatch(QdomError):
    pass


class PreconditionViolated(QdomError):
    pass


class BudgetExceeded(QdomError):
    pass


class EmptyUniverse(QdomError):
    pass


class UnknownTheorem(QdomError):
    pass
