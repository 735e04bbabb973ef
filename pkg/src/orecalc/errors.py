"""Exception hierarchy.

Every error raised by the library derives from :class:`OrecalcError`.  The
CLI maps the three families onto exit codes: :class:`ParseError` (2),
:class:`DomainError` (3) and :class:`InvariantError` (4).
"""


class OrecalcError(Exception):
    pass


class ParseError(OrecalcError, SyntaxError):
    """Malformed expression text; ``offset`` is the byte offset of the fault.

    Also a builtin :class:`SyntaxError`, so callers may catch either.
    """

    def __init__(self, message, offset=0):
        super().__init__(f"{message} at offset {offset}")
        self.msg = message
        self.offset = offset


class DomainError(OrecalcError):
    """An operation is undefined for its input, or the concrete field is too small."""


class InvariantError(OrecalcError):
    """An internal consistency check failed."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NoRationalAntiderivative(DomainError):
    pass


class PoleAtZero(DomainError):
    pass


class DivisionByZeroOperator(DomainError, ZeroDivisionError):
    pass


class DependentSolutions(DomainError):
    pass


class NotASolution(DomainError):
    pass


class ZeroDenominator(DomainError, ZeroDivisionError):
    pass


class ZeroInverse(DomainError, ZeroDivisionError):
    pass


class ZeroElement(DomainError):
    pass


class DependentInput(DomainError):
    pass


class SearchBudgetExceeded(DomainError):
    pass


class DenominatorNotSplit(DomainError):
    pass


class AntiderivativeObstruction(DomainError):
    pass


class ZeroInput(DomainError):
    pass


class ZeroToPrecision(DomainError):
    pass


class RankNotStabilized(InvariantError):
    pass
