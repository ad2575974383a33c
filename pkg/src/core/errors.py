class OperatorLabError(Exception):
    """Base class for every error raised by the laboratory."""


# --- Input errors ---


class DimensionMismatch(OperatorLabError, ValueError):
    pass


class NonFiniteEntries(OperatorLabError, ValueError):
    pass


class InvalidExponent(OperatorLabError, ValueError):
    pass


class NotNormal(OperatorLabError, ValueError):
    pass


class SpectralKindMismatch(OperatorLabError, ValueError):
    pass


class MissingDerivative(OperatorLabError, ValueError):
    pass


class NotTorusFunction(OperatorLabError, ValueError):
    pass


class DegreeTooHigh(OperatorLabError, ValueError):
    pass


class BandlimitExceeded(OperatorLabError, ValueError):
    pass


class MissingSupBound(OperatorLabError, ValueError):
    pass


class TruncationInsufficient(OperatorLabError, ValueError):
    pass


class SupportNotCovered(OperatorLabError, ValueError):
    pass


class RegimeMismatch(OperatorLabError, ValueError):
    pass


class ConstraintViolated(OperatorLabError, ValueError):
    pass


class UnsupportedRepresentation(OperatorLabError, ValueError):
    pass


class MissingFactorization(OperatorLabError, ValueError):
    pass


# --- Numerical failures ---


class NoConvergence(OperatorLabError, RuntimeError):
    pass
