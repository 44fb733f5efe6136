"""
mirrorlab 예외 정의
"""


class MirrorLabError(Exception):
    """Base class for every error raised by mirrorlab."""


class PreconditionError(MirrorLabError, ValueError):
    """An operation was called outside its stated domain."""


class InvalidParams(PreconditionError):
    """A rational or a hypergeometric parameter list could not be accepted."""


class DivisionByNonUnit(MirrorLabError, ZeroDivisionError):
    """Series division by a series with zero constant term."""


class BadConstantTerm(PreconditionError):
    """exp/log/pow called on a series with the wrong constant term."""


class NonNilpotentInner(PreconditionError):
    """compose(f, g) with g(0) != 0."""


class NotReversible(PreconditionError):
    """revert(f) with f(0) != 0 or f'(0) == 0."""


class BadPrime(PreconditionError):
    """The prime divides a parameter denominator."""


class NotFound(MirrorLabError):
    """No prime in the requested residue class below the search bound."""


class FormViolation(MirrorLabError):
    """A Dwork image does not have any of the forms allowed for its case."""


class NotTriangle(MirrorLabError):
    """The pair does not come from a (m1, m2, oo) triangle group."""


class IncompleteOrbit(PreconditionError):
    """Parameters with a common denominator do not form whole totative sets."""


class ClassificationError(MirrorLabError):
    """An enumerated entry failed its own verification."""
