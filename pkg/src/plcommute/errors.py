"""Exception hierarchy shared by every module of the package."""


class PLError(ValueError):
    """Base class for all errors raised by plcommute."""


# map construction / evaluation
class EmptyInput(PLError):
    pass


class DomainNotUnit(PLError):
    pass


class NonMonotoneX(PLError):
    pass


class OutOfRange(PLError):
    pass


class OutOfDomain(PLError):
    pass


class InfinitePreimage(PLError):
    pass


# commutators
class InvalidT(PLError):
    pass


# lattice
class PreconditionViolated(PLError):
    pass


class NotCommuting(PLError):
    pass


class TrivialPsi(PLError):
    pass


class LatticeMismatch(PLError):
    pass


class UnmatchedKink(PLError):
    pass


# conjugacy
class NotHomeomorphism(PLError):
    pass


class NoCycleWithinCap(PLError):
    pass


class InvalidItinerary(PLError):
    pass


# families
class ParamOutOfRange(PLError):
    pass


class DegenerateShape(PLError):
    pass


class SlopeAtZeroNotTwo(PLError):
    pass


class PositiveFixedPoint(PLError):
    pass


class NotIncreasingLeg(PLError):
    pass


class NotTentConjugate(PLError):
    pass


# text format
class ParseError(PLError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class StepCapExceeded(PLError):
    pass
