"""Exception types shared across the toolkit."""


class EmptyInputError(ValueError):
    """Raised when an operation receives an empty signal or window."""


class ShapeError(ValueError):
    """Raised on mismatched array lengths or malformed matrices."""


class TooShortError(ValueError):
    """Raised when a signal is too short for the requested operation."""


class DegenerateEnvelopeError(ValueError):
    """Raised when too few extrema remain to fit an envelope spline."""


class ZeroNoiseError(ValueError):
    """Raised when the noise estimate is identically zero (SNR undefined)."""


class NoiseDominatesError(ValueError):
    """Raised when the signal eigenvalue does not exceed the noise eigenvalue."""
