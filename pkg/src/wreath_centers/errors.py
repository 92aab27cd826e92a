"""Exception types shared across the package."""


class WreathCentersError(Exception):
    """Base class for all domain errors raised by this package."""


class NotAssociative(WreathCentersError):
    """Multiplication table fails associativity; carries a witness triple."""


class NoIdentity(WreathCentersError):
    """Multiplication table has no two-sided identity."""


class NotBijectiveRow(WreathCentersError):
    """A row or column of the multiplication table is not a permutation."""


class UnsupportedSpec(WreathCentersError):
    """Unknown builtin group spec string or out-of-range parameter."""


class DiagonalizationFailed(WreathCentersError):
    """Character table eigensolve did not separate after retries."""


class NotSubtractable(WreathCentersError):
    """Partition difference requested where containment fails."""


class PadTooSmall(WreathCentersError):
    """Target size is smaller than the object being padded."""


class SizeMismatch(WreathCentersError):
    """Operands do not have the common size the operation requires."""


class NotACycle(WreathCentersError):
    """Position sequence is not a cycle of the given permutation."""


class SupportExceedsN(WreathCentersError):
    """Partial permutation support does not fit inside the ambient [n]."""


class NotProper(WreathCentersError):
    """Family has parts equal to 1 at the identity class where forbidden."""


class BasisMismatch(WreathCentersError):
    """Operation received vectors expressed in incompatible bases."""


class CapExceeded(WreathCentersError):
    """A streamed class or enumeration exceeds the configured cap."""


class GuardrailExceeded(WreathCentersError):
    """Brute-force oracle invoked beyond its hard size guardrail."""


class Overflow(WreathCentersError):
    """Input exceeds the compiled kernel's fixed-width encoding."""
