"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class PdmError(Exception):
    """Base class for every error raised by pdmchannel."""

    exit_code: int = 1


class InvalidParam(PdmError, ValueError):
    """A parameter is outside the domain of the model or routine."""

    exit_code = 4


class PoleAtOrigin(PdmError, ArithmeticError):
    """A csch coefficient was evaluated at x = 0."""

    exit_code = 4


class DerivativeOrderUnsupported(PdmError):
    """A field was asked for a derivative beyond its supported order."""

    exit_code = 4


class UnknownIdentity(PdmError, KeyError):
    exit_code = 4


class PoleInSigma(PdmError, ArithmeticError):
    """The diagonal matrix element has a genuine (non-removable) pole."""

    exit_code = 4


class NoMatch(PdmError):
    """An operator could not be written in the requested basis."""

    exit_code = 5


class InvalidBranch(PdmError):
    """A parafermionic structure function is not positive on 1..p."""

    exit_code = 5


class PhaseMismatch(PdmError):
    """Quadrature and analytic matrix elements disagree in magnitude."""

    exit_code = 5


class NonConvergent(PdmError, ArithmeticError):
    """Quadrature node doubling changed the result beyond tolerance."""

    exit_code = 3


class DegenerateGram(PdmError, ArithmeticError):
    exit_code = 3


class TruncationTooSmall(PdmError, ArithmeticError):
    """Finite-difference eigenvalues depend on the truncation point."""

    exit_code = 3


class BesselZeroNotFound(PdmError, ArithmeticError):
    exit_code = 3


class OutputError(PdmError, OSError):
    """A report or CSV file could not be written."""

    exit_code = 6
