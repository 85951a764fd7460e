"""Least-squares linear-phase FIR bandpass design and application.

The band edges are normalized to Nyquist (0.5 maps to 64 Hz at a 256 Hz
sampling rate).  The desired response is a brick-wall bandpass with narrow
don't-care transition regions of width 0.01 on each edge; the least-squares
fit uses unit weighting on all specified bands.  At order 10 the realized
response is necessarily loose: the transition regions span a large part of
the band and the DC leakage is substantial (|H(0)| ~ 0.94 for the default
band), which is inherent to the low order rather than a design defect.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.signal

from .core import SampledSignal
from .errors import EmptyInputError, ShapeError

TRANSITION_WIDTH = 0.01

DEFAULT_ORDER = 10
DEFAULT_BAND = (0.02, 0.5)


@dataclass(frozen=True)
class FirCoefficients:
    """Symmetric (Type I linear phase) FIR taps with their design band."""

    taps: np.ndarray
    order: int
    band: tuple[float, float]

    def __post_init__(self):
        taps = np.asarray(self.taps, dtype=float)
        object.__setattr__(self, "taps", taps)
        if len(taps) != self.order + 1:
            raise ShapeError(
                f"expected {self.order + 1} taps for order {self.order}, got {len(taps)}"
            )

    @property
    def group_delay(self) -> int:
        return self.order // 2

    def frequency_response(self, freqs: np.ndarray) -> np.ndarray:
        """Complex response at normalized frequencies (1.0 = Nyquist)."""
        freqs = np.atleast_1d(np.asarray(freqs, dtype=float))
        n = np.arange(len(self.taps))
        return np.exp(-1j * np.pi * np.outer(freqs, n)) @ self.taps


def design_firls(
    order: int = DEFAULT_ORDER,
    low: float = DEFAULT_BAND[0],
    high: float = DEFAULT_BAND[1],
) -> FirCoefficients:
    """Design a linear-phase bandpass by least squares.

    ``order`` must be even (Type I filter, integer group delay of
    ``order / 2`` samples).  ``low`` and ``high`` are normalized to Nyquist.
    """
    if order < 2 or order % 2 != 0:
        raise ValueError(f"order must be even and >= 2, got {order}")
    if not (0.0 < low < high < 1.0):
        raise ValueError(f"need 0 < low < high < 1, got ({low}, {high})")

    # Transition regions shrink when the band leaves no room for them.
    tw = min(TRANSITION_WIDTH, low / 2, (1.0 - high) / 2, (high - low) / 4)
    bands = [0.0, low - tw, low, high, high + tw, 1.0]
    desired = [0.0, 0.0, 1.0, 1.0, 0.0, 0.0]
    taps = scipy.signal.firls(order + 1, bands, desired)
    taps = (taps + taps[::-1]) / 2.0  # enforce exact symmetry
    return FirCoefficients(taps=taps, order=order, band=(low, high))


def convolve(signal: SampledSignal, h: FirCoefficients) -> SampledSignal:
    """Causal direct-form convolution with zero initial conditions.

    Output length equals input length; samples before index 0 are treated
    as zero.
    """
    if len(signal) == 0:
        raise EmptyInputError("cannot convolve an empty signal")
    full = np.convolve(signal.samples, h.taps)
    return signal.with_samples(full[: len(signal)])


def compensate_delay(signal: SampledSignal, order: int) -> SampledSignal:
    """Undo the order/2-sample group delay of a Type I linear-phase filter.

    Shifts the signal left by ``order // 2`` samples and pads the tail with
    the final sample value, preserving length.
    """
    shift = order // 2
    if shift == 0:
        return signal
    if len(signal) <= shift:
        raise ShapeError(
            f"signal of length {len(signal)} too short for delay {shift}"
        )
    shifted = np.concatenate(
        [signal.samples[shift:], np.full(shift, signal.samples[-1])]
    )
    return signal.with_samples(shifted)
