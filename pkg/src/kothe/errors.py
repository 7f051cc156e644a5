"""Exception types raised by the library.

Everything derives from :class:`KotheError` so callers can catch broadly.
Validation problems (bad descriptors, bad weights) raise plain
``ValueError`` subtypes; computational dead ends get their own classes so
the CLI can map them to exit code 3.
"""


class KotheError(Exception):
    """Base class for all library errors."""


class NonMonotoneTail(KotheError):
    """Tail rule is not eventually monotone where monotonicity is required."""


class UnboundedTail(KotheError):
    """Tail supremum is infinite."""


class DivergentTail(KotheError):
    """A tail series required to converge diverges under the certificate."""


class NotInSpace(KotheError):
    """Certified tail bound shows the element is not in the space."""


class UnknownDual(KotheError):
    """No Köthe-dual rule is known for the constructor."""


class ModularDivergent(KotheError):
    """No scaling makes the Orlicz modular finite."""


class ExponentOrder(KotheError):
    """Exponent sequences violate the required ordering."""


class BranchOverflow(KotheError):
    """Closed-form branch index exceeds the supported factorial range."""


class InverseDomain(KotheError):
    """Argument outside the invertible range of a monotone function."""


class HypothesisUnmet(KotheError):
    """A rule's standing hypothesis could not be certified."""


class OutsideSupport(KotheError):
    """Point does not belong to any piece of a measure partition."""


class UnsupportedIntegrand(KotheError):
    """Integrand rule has no exact piecewise integrator."""


class UnsupportedTail(KotheError):
    """Operation not available for this tail rule."""


class DescriptorError(ValueError, KotheError):
    """Malformed space descriptor, weight or sequence specification."""
