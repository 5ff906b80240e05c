"""Exception hierarchy shared by every module of the package."""


class TwistAlexError(Exception):
    """Base class for all errors raised by twistalex."""


class ModulusMismatch(TwistAlexError, ValueError):
    pass


class NotDivisible(TwistAlexError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class H1NotZ(TwistAlexError, ValueError):
    """The presentation does not abelianize to the integers."""


class EvenModulus(TwistAlexError, ValueError):
    pass


class DenominatorZero(TwistAlexError, ZeroDivisionError):
    pass


class NonDeficiencyOne(TwistAlexError, ValueError):
    pass


class NotNormalForm(TwistAlexError, ValueError):
    """The representation is not in the diagonal/antidiagonal metabelian form."""


class ParseError(TwistAlexError, ValueError):
    """Syntax or validation error in a knot input file.

    ``line`` and ``column`` are 1-based; ``column`` may be ``None`` when the
    problem concerns a whole line.
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
