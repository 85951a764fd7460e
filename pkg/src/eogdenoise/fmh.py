"""FIR median hybrid filtering.

At each sample the filter takes the median of five subfilter outputs:
forward and backward averages over ``L`` neighbours, forward and backward
FIR smoothers, and the centre sample itself.  The averaging subfilters
provide noise suppression while the median step lets sharp edges pass
unblurred, which suits the step-like shape of saccadic EOG.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SampledSignal
from .errors import TooShortError

DEFAULT_HALF_LEN = 16


@dataclass(frozen=True)
class FmhConfig:
    """Subfilter half-length, median weights and FIR smoother taps.

    With the default uniform taps the FIR subfilters coincide with the
    causal/anticausal means, giving the classic three-subfilter behaviour
    extended to five.
    """

    half_len: int = DEFAULT_HALF_LEN
    weights: tuple[float, ...] = (1.0, 1.0, 1.0, 1.0, 1.0)
    fir_taps: np.ndarray | None = None

    def __post_init__(self):
        if self.half_len < 2:
            raise ValueError(f"half_len must be >= 2, got {self.half_len}")
        if len(self.weights) != 5 or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be 5 positive values")
        taps = self.fir_taps
        if taps is None:
            taps = np.full(self.half_len, 1.0 / self.half_len)
        else:
            taps = np.asarray(taps, dtype=float)
            if len(taps) != self.half_len:
                raise ValueError(
                    f"fir_taps must have length {self.half_len}, got {len(taps)}"
                )
        object.__setattr__(self, "fir_taps", taps)


def subfilter_outputs(
    x: np.ndarray, n: int, cfg: FmhConfig
) -> tuple[float, float, float, float, float]:
    """The five subfilter values at interior index ``n``.

    ``p1``/``p5`` are the forward/backward means over ``L`` neighbours,
    ``p2``/``p4`` the backward/forward FIR outputs, ``p3`` the centre
    sample.
    """
    L = cfg.half_len
    if not L <= n < len(x) - L:
        raise IndexError(f"index {n} is not interior for half_len {L}")
    h = cfg.fir_taps
    p1 = float(np.mean(x[n + 1 : n + L + 1]))
    p2 = float(np.dot(h, x[n - L : n][::-1]))
    p3 = float(x[n])
    p4 = float(np.dot(h, x[n + 1 : n + L + 1]))
    p5 = float(np.mean(x[n - L : n]))
    return p1, p2, p3, p4, p5


def weighted_median5(values, weights) -> float:
    """Sample median of the five products ``w_i * p_i``.

    This is the literal product-then-median rule; the median of five values
    is the third order statistic.
    """
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if values.shape != (5,) or weights.shape != (5,):
        raise ValueError("need exactly 5 values and 5 weights")
    return float(np.median(values * weights))


def fmh_filter(signal: SampledSignal, cfg: FmhConfig | None = None) -> SampledSignal:
    """Apply the five-subfilter median hybrid across the whole signal.

    Boundaries are handled by reflecting the signal (edge sample excluded)
    by ``L`` samples on each side before filtering.
    """
    if cfg is None:
        cfg = FmhConfig()
    L = cfg.half_len
    n = len(signal)
    if n < 2 * L + 1:
        raise TooShortError(
            f"need at least {2 * L + 1} samples for half_len {L}, got {n}"
        )
    x = np.pad(signal.samples, L, mode="reflect")
    h = cfg.fir_taps
    w1, w2, w3, w4, w5 = cfg.weights

    centre = np.arange(L, L + n)
    # Forward/backward means via cumulative sums.
    csum = np.concatenate([[0.0], np.cumsum(x)])
    p1 = (csum[centre + L + 1] - csum[centre + 1]) / L
    p5 = (csum[centre] - csum[centre - L]) / L
    if np.allclose(h, 1.0 / L):
        p2, p4 = p5, p1
    else:
        # correlate x with taps over the backward/forward windows
        full = np.convolve(x, h)
        p2 = full[centre - 1]          # sum h[i] * x[n-1-i]
        p4 = np.convolve(x, h[::-1])[centre + L]  # sum h[i] * x[n+1+i]
    p3 = x[centre]
    stacked = np.stack([w1 * p1, w2 * p2, w3 * p3, w4 * p4, w5 * p5])
    return signal.with_samples(np.median(stacked, axis=0))
