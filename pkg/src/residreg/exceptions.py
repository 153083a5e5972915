"""Exception hierarchy.

Errors fall in two families that the command line maps to distinct exit
codes: problems with the supplied data (3) and numerical failures such as
rank deficiency (4).
"""


class ResidRegError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class DataError(ResidRegError, ValueError):
    exit_code = 3


class NumericalError(ResidRegError, ArithmeticError):
    exit_code = 4


class DimensionMismatch(DataError):
    pass


class ColumnNotFound(DataError, KeyError):
    def __str__(self):
        # KeyError would otherwise repr() the message
        return str(self.args[0]) if self.args else ""


class ZeroVariance(DataError):
    pass


class NonPositiveInput(DataError):
    pass


class ParseError(DataError):
    """A CSV cell or row could not be parsed.

    ``row`` and ``col`` are 1-based; ``row`` counts physical lines with the
    header as line 1.
    """

    def __init__(self, message, row=None, col=None):
        self.row = row
        self.col = col
        loc = []
        if row is not None:
            loc.append(f"row {row}")
        if col is not None:
            loc.append(f"col {col}")
        if loc:
            message = f"{message} (at {', '.join(loc)})"
        super().__init__(message)


class EmptyData(DataError):
    pass


class DuplicateHeader(DataError):
    pass


class RankDeficient(NumericalError):
    pass


class InsufficientObservations(NumericalError):
    pass


class PerfectCollinearity(NumericalError):
    pass


class IdentityViolation(NumericalError):
    pass


class ZeroResidualVariance(NumericalError):
    pass
