"""Exception hierarchy shared by all modules.

The CLI maps :class:`ValidationError` to exit status 2 and
:class:`NumericRangeError` to exit status 3.
"""


class ZetashiftError(Exception):
    pass


class ValidationError(ZetashiftError, ValueError):
    """Input violates a documented precondition."""


class ConstraintViolation(ValidationError):
    """An exponent-pair admissibility inequality does not hold."""


class InfeasibleError(ValidationError):
    """No candidate satisfies the constraints of an optimization."""


class NumericRangeError(ZetashiftError, ArithmeticError):
    """Evaluation point is a pole or lies outside the supported range."""
