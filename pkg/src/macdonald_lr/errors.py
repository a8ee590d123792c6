"""
Exception hierarchy for macdonald_lr.

Division failures subclass ZeroDivisionError, malformed input subclasses
ParseError, and violated operation preconditions subclass PreconditionError.
The command line maps the last two families to distinct exit codes.
"""


class ZeroDenominatorError(ZeroDivisionError):
    """A rational value was built with a zero denominator."""


class DivisionByZeroError(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtPointError(ZeroDivisionError):
    """The denominator vanishes at the evaluation point."""


class IdenticallySingularError(ArithmeticError):
    """The denominator vanishes identically under the specialization q = t."""


class ParseError(ValueError):
    pass


class InvalidPartitionError(ParseError):
    pass


class InvalidTableauError(ParseError):
    pass


class InvalidPatternError(ParseError):
    pass


class PreconditionError(ValueError):
    pass


class CellOutsideShapeError(PreconditionError):
    pass


class SizeMismatchError(PreconditionError):
    pass


class NotContainedError(PreconditionError):
    pass


class NotVerticalStripError(PreconditionError):
    pass


class NotHorizontalStripError(PreconditionError):
    pass


class CapTooSmallError(PreconditionError):
    pass


class NotRectangularError(PreconditionError):
    pass


class WrongKindError(PreconditionError):
    pass


class NTooSmallError(PreconditionError):
    pass


class NotLatticeWordError(PreconditionError):
    pass


class NotUniqueBlockError(PreconditionError):
    pass


class NuNotPartitionError(PreconditionError):
    pass


class NotUniqueTableauError(PreconditionError):
    pass


class KostkaNotOneError(PreconditionError):
    """The weight admits zero or several tableaux of the shape."""

    def __init__(self, message: str, multiplicity: str):
        super().__init__(message)
        self.multiplicity = multiplicity
