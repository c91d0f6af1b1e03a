"""Exception hierarchy. Every domain failure is a ``DomainError`` (a ``ValueError``)."""


class DomainError(ValueError):
    pass


class KindMismatch(DomainError):
    pass


class NullNorm(DomainError, ZeroDivisionError):
    """Element lies on the null cone and has no inverse."""


class NotUnit(DomainError):
    pass


class NotVector(DomainError):
    pass


class NotOnCone(DomainError):
    pass


class NotEuclidForm(DomainError):
    pass


class NonZeroTrace(DomainError):
    pass


class NotRankOneCone(DomainError):
    pass


class NotIntegerSpinor(DomainError):
    pass


class NotPrimitive(DomainError):
    pass


class NotNormalized(DomainError):
    pass


class NullNormal(DomainError):
    pass


class NotSubboundary(DomainError):
    pass


class Degenerate(DomainError):
    pass


class NotTangent(DomainError):
    pass


class NonIntegerResult(DomainError):
    pass
