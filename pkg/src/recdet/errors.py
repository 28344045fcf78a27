"""Exception types raised across the package."""


class RecdetError(Exception):
    """Base class for all library errors."""


class DivisionByZero(RecdetError, ZeroDivisionError):
    pass


class NotDivisible(RecdetError, ArithmeticError):
    """Polynomial long division left a nonzero remainder."""


class BothZero(RecdetError, ValueError):
    pass


class ZeroDenominator(RecdetError, ZeroDivisionError):
    """A reciprocal or quotient would divide by a zero term.

    ``index`` identifies the offending sequence index (or entry) when known.
    """

    def __init__(self, index=None, message=None):
        self.index = index
        if message is None:
            message = "zero denominator" if index is None else f"zero denominator at index {index}"
        super().__init__(message)


class ParseError(RecdetError, ValueError):
    pass


class TooLarge(RecdetError, ValueError):
    pass


class MissingProfile(RecdetError, ValueError):
    pass


class OutOfBounds(RecdetError, IndexError):
    pass


class MixedRecurrence(RecdetError, ValueError):
    """Two sequences were combined that do not share (a, b, c)."""


class LengthMismatch(RecdetError, ValueError):
    pass


class UndefinedIndex(RecdetError, KeyError):
    pass


class NotEvaluable(RecdetError, ValueError):
    """A closed form cannot be evaluated for the given parameters."""
