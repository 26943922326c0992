"""Exception types shared across the package.

Computation failures (exit code 1 in the CLI) are all subclasses of
ComputationError; bad user input is a plain ValueError/UsageError (exit 2).
"""


class ComputationError(Exception):
    """Base class for failures of the symbolic engines."""


class ZeroRank(ComputationError):
    """Slope of a rank-zero class was requested."""


class UnknownBundle(ValueError):
    """A named bundle string could not be parsed."""


class NoSolution(ComputationError):
    """The defining equation of an operation degenerates."""


class NotExceptional(ComputationError):
    """A class fails the self-pairing test chi(E, E) = 1."""


class Degenerate(ComputationError):
    """A mutation collapsed to the zero class (R_E E = 0)."""


class NegativePairing(ComputationError):
    """A hom-dimension pairing came out negative (non-strong input)."""


class DualityCheckFailed(ComputationError):
    """The dual collection failed its delta-pairing verification."""


class Inconsistent(ComputationError):
    """The fact store derived lo > hi: a registered fact is wrong."""


class TailNotCertified(ComputationError):
    """The infinite Sym tail of a pullback Ext could not be certified."""


class ClassificationViolation(ComputationError):
    """A secondary quiver shows the excluded linear arrow pattern."""


class NotTilting(ComputationError):
    """A heart was requested from a non-tilting pullback collection."""


class SelfExtObstruction(ComputationError):
    """Simple tilt at a simple with Ext^1(S, S) != 0."""


class ClassMismatch(ComputationError):
    """An alternate presentation has the wrong K-class."""


class NotApplicable(ComputationError):
    """The Mukai involution is not defined for this heart."""


class InexactEntry(ComputationError):
    """An operation needed an exact dimension but only has an interval."""
