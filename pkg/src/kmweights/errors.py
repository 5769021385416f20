"""Exception hierarchy shared by every module of the package."""


class KMError(Exception):
    """Base class for all library errors."""


class InvalidGCM(KMError, ValueError):
    """A matrix failed one of the generalized Cartan matrix axioms."""

    def __init__(self, message, i=None, j=None):
        super().__init__(message)
        self.i = i
        self.j = j


class DiagonalNotTwo(InvalidGCM):
    pass


class PositiveOffDiagonal(InvalidGCM):
    pass


class AsymmetricZero(InvalidGCM):
    pass


class NotSymmetrizable(KMError):
    pass


class RequiresSymmetrizable(KMError):
    pass


class RequiresFiniteType(KMError):
    pass


class NotInTitsCone(KMError):
    """Dominance raising did not terminate within the step bound.

    This is a bounded verdict, not a proof of exteriority.
    """

    def __init__(self, message, steps):
        super().__init__(message)
        self.steps = steps


class NonIntegralPairing(KMError):
    def __init__(self, j, value):
        super().__init__(f"pairing at index {j} is {value}, not an integer")
        self.j = j
        self.value = value


class NotDominant(KMError):
    pass


class NotDominantIntegral(KMError):
    def __init__(self, j, value):
        super().__init__(
            f"pairing at index {j} is {value}, not a non-negative integer")
        self.j = j
        self.value = value


class InfiniteStabilizer(KMError):
    pass


class IntegrabilityTooLarge(KMError):
    pass


class ZeroDenominator(KMError):
    pass


class BasepointMismatch(KMError):
    pass


class TruncationUncertain(KMError):
    pass
