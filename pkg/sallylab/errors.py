# -*- coding: utf-8 -*-

"""
Exceptions raised by the ideal, closure, Hilbert and Sally-module code.
"""


class SallyLabError(Exception):
    """Base class of all errors raised by sallylab."""


class MixedDimension(SallyLabError, ValueError):
    """Monomials or ideals of different ambient dimension were combined."""


class ZeroDivisorIdeal(SallyLabError, ValueError):
    """A colon ideal I : J was requested with J the zero ideal."""


class NotMPrimary(SallyLabError, ValueError):
    """Some variable has no pure power among the generators."""


class NotContained(SallyLabError, ValueError):
    """A quotient length l(I/J) was requested with J not contained in I."""


class NotAReduction(SallyLabError, ValueError):
    """Q is not a reduction of I."""


class NotParameterIdeal(SallyLabError, ValueError):
    """Q is not generated by d pure powers of distinct variables."""


class ExponentOverflow(SallyLabError, OverflowError):
    """An exponent left the range the int64 arithmetic can hold."""


class HypothesisViolated(SallyLabError, ValueError):
    """An analysis was called outside the hypotheses it depends on."""


class BudgetExceeded(SallyLabError, RuntimeError):
    """An iterative computation did not finish within its configured bound."""


class InsufficientWindow(SallyLabError, RuntimeError):
    """The Hilbert function table is not yet polynomial on its top entries."""


class NegativeRank(SallyLabError, ArithmeticError):
    """e1 - e0 + l(A/I) came out negative, contradicting Northcott."""


class RangeViolation(SallyLabError, ArithmeticError):
    """A proven numerical range was left. Either a bug or a counterexample."""


class ValidationError(SallyLabError, ValueError):
    """An ideal specification is well-formed but mathematically invalid."""


class ParseError(SallyLabError, ValueError):
    """
    An ideal specification could not be parsed. Carries the `line` and
    `column` of the problem (if known) and the offending `field`.
    """
    def __init__(self, message, line=None, column=None, field=None):
        location = []
        if line is not None:
            location.append('line %d' % line)
        if column is not None:
            location.append('column %d' % column)
        if field is not None:
            location.append('field %r' % field)
        if location:
            message = '%s (%s)' % (message, ', '.join(location))
        super(ParseError, self).__init__(message)
        self.line = line
        self.column = column
        self.field = field
