"""Exception hierarchy for specdet.

Every error raised deliberately by the package derives from
:class:`SpecdetError`, so callers can catch the whole family at once.
"""

from __future__ import annotations


class SpecdetError(Exception):
    """Base class for all specdet errors."""


# branch-cut logarithm
class ZeroArgument(SpecdetError, ValueError):
    """The logarithm of zero was requested."""


class OnBranchCut(SpecdetError, ValueError):
    """A point (or an eigenvalue ray) lies on the chosen branch cut."""


# special functions
class PoleAtOne(SpecdetError, ValueError):
    """Zeta function evaluated at its pole s = 1."""


class DomainError(SpecdetError, ValueError):
    """Argument outside the supported domain."""


class LimitExceeded(SpecdetError, ValueError):
    """A table or iteration limit was exceeded."""


class QuadratureFailure(SpecdetError, ArithmeticError):
    """Numerical integration did not reach the requested tolerance."""


# spectrum / determinant
class ValidationError(SpecdetError, ValueError):
    """Input violates a documented invariant."""


class IndexOutOfRange(SpecdetError, IndexError):
    pass


class CutOnRay(SpecdetError, ValueError):
    """A sweep endpoint coincides with an eigenvalue ray."""


class UnsupportedSweep(SpecdetError, ValueError):
    """The sweep passes through the eigenvalue arc of a shifted line."""


class NearPole(SpecdetError, ValueError):
    """Evaluation point too close to a pole of a zeta kernel."""

    def __init__(self, message: str, pole: complex):
        super().__init__(message)
        self.pole = pole


class DivergentAtZero(SpecdetError, ArithmeticError):
    """The derivative of the zeta function has no finite value at s = 0."""


class UndefinedZeta(SpecdetError, ArithmeticError):
    """The spectral zeta function has no half-plane of convergence."""


class OutsideConvergenceRegion(SpecdetError, ValueError):
    """The defining eigenvalue sum does not converge at the requested s."""


# config parsing
class ParseError(SpecdetError, ValueError):
    """Malformed configuration document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)
        self.line = line
        self.column = column
