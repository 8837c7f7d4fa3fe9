"""Exception hierarchy shared by every module of the package."""


class CoalgMinError(Exception):
    """Base class for all errors raised by coalgmin."""


class InvalidValue(CoalgMinError, ValueError):
    """A set, map, functor value or coalgebra violates its invariants."""


class StateOutOfRange(InvalidValue):
    pass


class NotSurjective(CoalgMinError):
    pass


class NotInjective(CoalgMinError):
    pass


class SquareDoesNotCommute(CoalgMinError):
    pass


class MixedCodomains(CoalgMinError):
    pass


class MixedCarriers(CoalgMinError):
    pass


class SpecMismatch(CoalgMinError):
    pass


class CarrierMismatch(CoalgMinError):
    pass


class NotAHomomorphism(CoalgMinError):
    pass


class NotACongruence(CoalgMinError):
    pass


class WrongFunctor(CoalgMinError):
    pass


class TooLarge(CoalgMinError):
    """Raised by brute-force oracles whose input exceeds the enumeration bound."""


class Incomplete(CoalgMinError):
    pass


class ParseError(CoalgMinError):
    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class ValidationError(CoalgMinError):
    def __init__(self, state, reason: str):
        where = f"state {state!r}: " if state is not None else ""
        super().__init__(where + reason)
        self.state = state
        self.reason = reason
