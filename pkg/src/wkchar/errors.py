"""Exception hierarchy.

``PreconditionError`` subclasses signal violated mathematical hypotheses of
an operation (the CLI maps them to exit code 2); ``UsageError`` signals
malformed command-line input (exit code 1).
"""


class WkcharError(Exception):
    """Base class for all library errors."""


class InvalidLieTypeError(WkcharError, ValueError):
    """Family/rank combination does not name a simple Lie algebra."""


class PreconditionError(WkcharError, ValueError):
    """A mathematical hypothesis of the requested operation fails."""


class CriticalLevelError(PreconditionError):
    """kappa = 0: the character theory is not defined at the critical level."""


class DegenerateWeightError(PreconditionError):
    """The weight pairs integrally with a finite root."""


class DomainError(PreconditionError):
    """The weight lies outside the required dominance chamber."""


class CosetError(PreconditionError):
    """Group element is not the extremal representative of its coset."""


class MembershipError(PreconditionError):
    """Group element does not lie in the integral Weyl group."""


class ClosureBoundError(WkcharError, RuntimeError):
    """Root-slice closure could not be verified within the bound cap."""


class UsageError(WkcharError, ValueError):
    """Malformed command-line invocation."""
