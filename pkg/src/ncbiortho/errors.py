"""Exception hierarchy shared by all modules."""


class NCBError(Exception):
    """Base class for library errors."""


class RingMismatchError(NCBError, TypeError):
    """Operands come from different rings."""


class CentralityError(NCBError, ValueError):
    """A coefficient that must lie in the center does not."""


class DegreeError(NCBError, ValueError):
    """Degree or leading coefficient of the zero polynomial was requested."""


class InsufficientBimomentsError(NCBError, IndexError):
    """A bimoment outside the finite table was needed."""

    def __init__(self, a, b, rows, cols):
        self.missing = (a, b)
        super().__init__(
            f"bimoment I[{a},{b}] is required but the table is only {rows}x{cols}"
        )


class SingularMatrixError(NCBError, ZeroDivisionError):
    """Gaussian elimination found no pivot."""

    def __init__(self, column):
        self.column = column
        super().__init__(f"matrix is singular: no nonzero pivot in column {column}")


class QuasideterminantUndefinedError(NCBError, ZeroDivisionError):
    """The minor A^{i,j} is singular, so |A|_{i,j} does not exist."""


class GenericityError(NCBError, ArithmeticError):
    """A quasideterminant needed by the construction does not exist or vanishes."""

    def __init__(self, index, message):
        self.index = index
        super().__init__(f"genericity violated at n={index}: {message}")


class DegenerateNormalizationError(NCBError, ZeroDivisionError):
    """Some pi_k or eta_l is zero so D_pi or D_eta cannot be inverted."""

    def __init__(self, which, index):
        self.which = which
        self.index = index
        super().__init__(f"{which}[{index}] is zero; diagonal scaling is not invertible")


class TruncationError(NCBError, ValueError):
    """Finite truncations of different sizes were combined."""


class InconsistencyError(NCBError, ArithmeticError):
    """An identity that must hold on the exact region failed."""
