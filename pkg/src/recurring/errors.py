"""Exception types shared by every module in the package."""


class RecurringError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyCoefficients(RecurringError):
    """A core polynomial needs at least one coefficient."""


class DegenerateCore(RecurringError):
    """tk = 0 makes the core divisible by X; factor out X powers first."""


class ZeroPolynomial(RecurringError):
    """The operation is undefined for the zero polynomial."""


class ModulusMismatch(RecurringError):
    """Mod-p operands disagree on the modulus or on the dimension."""


class DivisionByZeroPoly(RecurringError):
    """Polynomial division by the zero polynomial."""


class NotPrime(RecurringError):
    """A modulus that must be prime is not."""


class XNotInvertible(RecurringError):
    """X is a zero divisor modulo a polynomial with zero constant term."""


class SingularMatrix(RecurringError):
    """Inverse or multiplicative order requested for a singular matrix."""


class SingularCompanion(RecurringError):
    """p divides tk, so the companion matrix is singular modulo p."""


class NonUnitTrailing(RecurringError):
    """Exact backward stepping needs |tk| = 1."""


class LegOutOfRange(RecurringError):
    """Hook leg lengths are limited to 0..k-1."""


class ContextMismatch(RecurringError):
    """Ring elements from different quotient rings cannot be combined."""


class HypothesisNotMet(RecurringError):
    """A check was invoked outside the hypotheses under which it is stated."""


class NotCoprime(RecurringError):
    """Internal: cofactors of distinct irreducible factors must be coprime."""


class InternalInconsistency(RecurringError):
    """Two independent computations of the same quantity disagree.

    This is never expected; it indicates a bug and is surfaced loudly
    instead of being silently swallowed.
    """
