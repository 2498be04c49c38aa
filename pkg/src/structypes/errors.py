"""Exception hierarchy.  The CLI reports ``type(exc).__name__`` verbatim."""


class StructypesError(Exception):
    """Base class for every error raised by this package."""


class ParseError(StructypesError):
    pass


class ZeroConstantTerm(StructypesError, ZeroDivisionError):
    pass


class OrderTooSmall(StructypesError):
    pass


class NotPolynomial(StructypesError):
    pass


class UnboundRef(StructypesError):
    pass


class RecursionNotGuarded(StructypesError):
    pass


class StructureNotInSpecies(StructypesError):
    pass


class ReservedAtom(StructypesError):
    pass


class NotRegular(StructypesError):
    pass


class NonIntegralMultiplicity(StructypesError):
    pass


class NonFreeAction(StructypesError):
    pass


class BijectionFailure(StructypesError):
    pass


class NonIntegerCoefficient(StructypesError):
    pass


class SizeLimit(StructypesError):
    pass
