"""Exception hierarchy shared by every module."""


class MonolcError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(MonolcError, ValueError):
    """Objects from different ambient polynomial rings were combined."""


class ArgumentError(MonolcError, ValueError):
    pass


class DomainError(MonolcError, ValueError):
    """The ideal is outside the domain of an operation (zero ideal, unit ideal, ...)."""


class UnsupportedIdealError(DomainError):
    """The operation needs a squarefree ideal."""


class PreconditionError(MonolcError, ValueError):
    pass


class ConsistencyError(MonolcError, ArithmeticError):
    """An internal invariant failed (d*d != 0, a cochain that is not a cocycle, ...).

    Seeing this means there is a bug, not bad input.
    """


class ResourceLimitError(MonolcError):
    pass
