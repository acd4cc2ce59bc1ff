"""Exception types shared across the package."""


class TwoMatrixError(Exception):
    """Base class for errors raised by this package."""


class LengthExceedsN(TwoMatrixError, ValueError):
    """A partition has more parts than the size bound N allows."""


class RepeatedVariable(TwoMatrixError, ValueError):
    """Two evaluation points coincide (or are numerically inseparable)."""


class ZeroVariableForInverse(TwoMatrixError, ValueError):
    """Inverse power sums requested for a variable equal to zero."""


class SingularContent(TwoMatrixError, ArithmeticError):
    """A content weight r(N + j - i) is undefined at a needed node."""


class NegativeIndexUnsupported(TwoMatrixError, ValueError):
    """A negative moment index (or a Laurent deformation) was requested
    for a measure that only has non-negative moments."""


class DivergentDeformation(TwoMatrixError, ValueError):
    """An exponential deformation destroys convergence of the measure."""


class Divergent(TwoMatrixError, ArithmeticError):
    """An integral fails its convergence precondition."""


class QuadratureNotConverged(TwoMatrixError, ArithmeticError):
    """Point-count doubling did not certify the requested accuracy
    within the point budget."""


class TruncationNotConverged(TwoMatrixError, ArithmeticError):
    """The last shell of a truncated series exceeds the tolerance."""


class WindowTooSmall(TwoMatrixError, LookupError):
    """A bimoment window does not cover a requested index."""


class NUnsupported(TwoMatrixError, ValueError):
    """The requested matrix size is outside an engine's supported range."""


class ChargeMismatchWarning(UserWarning):
    """A vacuum pairing was requested at a charge the vector does not carry;
    the result is identically zero."""
