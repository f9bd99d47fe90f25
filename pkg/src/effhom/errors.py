"""Exception types shared across the package."""


class HomAlgError(Exception):
    """Base class for every error this package raises on purpose."""


class MembershipError(HomAlgError):
    """An element was used with a module it does not belong to."""


class ShapeMismatchError(HomAlgError):
    """Morphisms were combined over incompatible source/target modules."""


class ParseError(HomAlgError):
    """Element text does not match the grammar."""


class NotFiniteTypeError(HomAlgError):
    """A finite-type-only operation met an infinite-type module."""


class NotACycleError(HomAlgError):
    """A pre-image was requested for an element with nonzero boundary."""

    def __init__(self, message, boundary):
        super().__init__(message)
        self.boundary = boundary


class PreimageVerificationError(HomAlgError):
    """h(x) failed the d(h(x)) = x check, so h is not contracting at x."""

    def __init__(self, message, candidate, boundary):
        super().__init__(message)
        self.candidate = candidate
        self.boundary = boundary


class LawViolationError(HomAlgError):
    """A sampled law check found counterexamples; carries the full report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report
