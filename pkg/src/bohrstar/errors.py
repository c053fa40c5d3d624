"""Exception types shared across the library."""


class BohrstarError(Exception):
    """Base class for every library-specific failure."""


class ParamOutOfRange(BohrstarError, ValueError):
    """A kernel or solver parameter violates its documented range."""


class DomainError(BohrstarError, ValueError):
    """An evaluation point lies outside the function's domain."""


class NonzeroConstantTerm(BohrstarError, ValueError):
    """Operation requires a series with constant term 0."""


class NonunitConstantTerm(BohrstarError, ValueError):
    """Operation requires a series with constant term 1."""


class PositivityRequired(BohrstarError):
    """The kernel is not certified coefficient-nonnegative, so the radius
    theorems do not apply and the solver refuses to run."""


class BracketFailure(BohrstarError, ArithmeticError):
    """Root bracketing failed where a sign change was guaranteed; signals a
    bug in the extremal construction rather than bad input."""


class SlowConvergence(BohrstarError, ArithmeticError):
    """A series or integral did not meet its tail bound within budget."""


class TailTooLarge(BohrstarError, ArithmeticError):
    """Truncation tail estimate exceeds the requested bound."""


class NoSignChange(BohrstarError, ArithmeticError):
    """A threshold scan found no sign change over the parameter range."""


class MultipleSignChanges(BohrstarError, ArithmeticError):
    """A threshold scan found more than one crossing; the range is unusable."""


class NonMonotone(BohrstarError, ArithmeticError):
    """A function asserted to be monotone was observed not to be."""


class DualPathMismatch(BohrstarError, ArithmeticError):
    """Closed-form and series evaluations disagree beyond tolerance."""


class UncertifiedSchwarz(BohrstarError, ValueError):
    """The Schwarz-function certificate (coefficients summing to at most 1
    in absolute value, zero constant term) does not hold."""
