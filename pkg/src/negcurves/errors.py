"""Exception types raised across the package."""


class NegCurvesError(Exception):
    """Base class for all errors raised by negcurves."""


class DegenerateTriangle(NegCurvesError, ValueError):
    pass


class NonIntegralVertices(NegCurvesError, ValueError):
    pass


class NegativeResult(NegCurvesError, ValueError):
    """An involution left the non-negative branch of solutions."""


class NotASolution(NegCurvesError, ValueError):
    pass


class NonExactDivision(NegCurvesError, ArithmeticError):
    pass


class ZeroPolynomial(NegCurvesError, ValueError):
    pass


class OrderBoundExceeded(NegCurvesError, ArithmeticError):
    pass


class NoSuchEdge(NegCurvesError, LookupError):
    pass


class NoCurve(NegCurvesError):
    """The moment system has only the trivial solution."""


class NonUnique(NegCurvesError):
    """The moment system has a solution space of dimension two or more."""


class WrongCardinality(NegCurvesError, ValueError):
    pass


class BudgetExceeded(NegCurvesError, ValueError):
    """alpha + beta is too large for the strict transform to stay negative."""


class PreconditionFailed(NegCurvesError, ValueError):
    pass


class ParseError(NegCurvesError, ValueError):
    pass
