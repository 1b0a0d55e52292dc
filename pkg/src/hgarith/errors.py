"""Exception hierarchy shared by every layer of the package."""


class HGError(Exception):
    """Base class for all errors raised by hgarith."""


class SingularMatrix(HGError):
    """An inverse was requested for a matrix with zero determinant."""


class DimensionMismatch(HGError):
    pass


class NotGaloisStable(HGError):
    """The parameter multiset is not a union of full cyclotomic orbits."""


class DegreeMismatch(HGError):
    pass


class InvalidPair(HGError):
    """The polynomial pair fails the coprime/primitive/constant-term checks."""


class NoInvariantForm(HGError):
    pass


class NonUniqueForm(HGError):
    """The invariant-form solution space has dimension two or more."""


class DependentBasis(HGError):
    pass


class SingularP(SingularMatrix):
    pass


class DegenerateForm(HGError):
    pass


class NonStandardForm(HGError):
    """The form is not supported on the antidiagonal."""


class UnboundSymbol(HGError):
    pass


class SingularBase(HGError):
    pass


class ParseError(HGError):
    """Malformed input text; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        where = []
        if path:
            where.append(path)
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        text = message if not where else f"{message} ({', '.join(where)})"
        super().__init__(text)
