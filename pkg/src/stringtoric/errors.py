"""Exception hierarchy shared by all modules."""


class StringToricError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class EmptyPolyhedron(StringToricError):
    exit_code = 3


class Unbounded(StringToricError):
    pass


class DimensionOverflow(StringToricError):
    exit_code = 4


class BudgetExceeded(StringToricError):
    exit_code = 4


class DimMismatch(StringToricError):
    pass


class CenterNotInterior(StringToricError):
    pass


class NotFullDim(StringToricError):
    pass


class SupportMismatch(StringToricError):
    pass


class UnknownType(StringToricError):
    pass


class NotARoot(StringToricError):
    pass


class NotReduced(StringToricError):
    pass


class NotDominant(StringToricError):
    pass


class NotRegular(StringToricError):
    pass


class ProviderMismatch(StringToricError):
    pass


class CertificationFailed(StringToricError):
    exit_code = 5


class UncertifiedEmpirical(CertificationFailed):
    pass


class FiberNotSingleton(StringToricError):
    pass


class ShapeMismatch(StringToricError):
    pass


class ShapeTooTall(StringToricError):
    pass


class ChamberViolation(StringToricError):
    pass


class UnsupportedFormat(StringToricError):
    pass


class UsageError(StringToricError):
    exit_code = 2
