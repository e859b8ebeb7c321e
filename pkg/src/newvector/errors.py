"""Exception types raised by the library."""


class NewVectorError(ValueError):
    """Base class for all domain errors."""


class DegenerateIdeal(NewVectorError):
    pass


class NotSIntegral(NewVectorError):
    pass


class InvalidPlace(NewVectorError):
    pass


class UnsupportedBasis(NewVectorError):
    pass


class ConductorExceedsLevel(NewVectorError):
    pass


class ConductorDoesNotDivide(NewVectorError):
    pass


class MissingLevel(NewVectorError):
    pass


class CentralIdentity(NewVectorError):
    pass


class NotSUnit(NewVectorError):
    pass


class NotIntegralAtP(NewVectorError):
    pass


class CentralElement(NewVectorError):
    pass


class NotSemisimple(NewVectorError):
    pass


class SingularMatrix(NewVectorError):
    pass
