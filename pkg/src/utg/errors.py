"""Exception types raised across the package."""


class UtgError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(UtgError):
    """Ring spec text does not conform to the grammar."""


class TrivialQuotient(UtgError):
    """The requested quotient ring has fewer than two elements (or is infinite)."""


class UnsupportedRing(UtgError):
    """The requested ring family or parameter set is not supported."""


class MixedRings(UtgError):
    """Arithmetic attempted between elements of different rings."""


class OrderCapExceeded(UtgError):
    """Ring order exceeds the configured hard cap."""


class IndexOutOfRange(UtgError, IndexError):
    """Prime factor index out of range."""


class NotAnEdge(UtgError):
    """A vertex pair required to be adjacent is not."""


class FormatUnsupported(UtgError):
    """Graph export format cannot represent a graph of this size."""


class LimitExceeded(UtgError):
    """An exact search exceeds the configured oracle limits."""


class HypothesisNotMet(UtgError):
    """The hypothesis of a constructive witness does not hold for this ring."""


class ShapeMismatch(UtgError):
    """The ideal does not factor in the shape a construction requires."""


class NotPrimePower(UtgError):
    """Operation requires the modulus to be a single prime power."""


class NoIndexTwoPrimes(UtgError):
    """Operation requires at least one prime divisor of residue index 2."""


class WitnessUnavailable(UtgError):
    """A requested witness does not exist for this ring."""


class NotAPermutation(UtgError):
    """A vertex map is not a bijection on the vertex set."""


class IncompleteColoring(UtgError):
    """An edge coloring does not assign a color to every edge."""


class Unsupported(UtgError):
    """Input outside the domain of a closed form."""
