"""Empirical Mode Decomposition by sifting.

The decomposition peels off intrinsic mode functions (IMFs) one at a time:
upper and lower envelopes are natural cubic splines through the local maxima
and minima, the envelope mean is subtracted, and the subtraction repeats
until a Cauchy-type standard-deviation criterion falls below threshold.
Extrema are mirrored across the signal ends before spline fitting to keep
the envelopes from swinging wildly at the boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .core import SampledSignal
from .errors import DegenerateEnvelopeError, TooShortError

DEFAULT_SD_THRESHOLD = 0.3
DEFAULT_MAX_SIFT_ITERS = 10
DEFAULT_MAX_IMFS = 11
DEFAULT_KEEP = range(2, 10)  # one-based IMF indices 2..9 inclusive


@dataclass(frozen=True)
class ImfSet:
    """Ordered IMFs plus the final non-oscillatory residual."""

    imfs: list[np.ndarray]
    residual: np.ndarray
    sift_counts: list[int]

    def __len__(self) -> int:
        return len(self.imfs)


def find_extrema(x: np.ndarray) -> tuple[list[int], list[int]]:
    """Indices of interior local maxima and minima.

    The first index of a flat run that sits above (below) both run
    neighbours counts as the maximum (minimum); strictly monotone signals
    have none.
    """
    x = np.asarray(x, dtype=float)
    n = len(x)
    if n < 3:
        raise TooShortError(f"need at least 3 samples to find extrema, got {n}")

    d = np.diff(x)
    if np.all(d != 0.0):
        # No plateaus: plain triplet comparison, vectorized.
        interior = x[1:-1]
        maxima = np.where((interior > x[:-2]) & (interior > x[2:]))[0] + 1
        minima = np.where((interior < x[:-2]) & (interior < x[2:]))[0] + 1
        return list(maxima), list(minima)

    maxima: list[int] = []
    minima: list[int] = []
    i = 1
    while i < n - 1:
        j = i
        while j < n - 1 and x[j + 1] == x[i]:
            j += 1
        # run [i, j]; neighbours are x[i-1] and x[j+1] (if present)
        if j < n - 1:
            if x[i - 1] < x[i] > x[j + 1]:
                maxima.append(i)
            elif x[i - 1] > x[i] < x[j + 1]:
                minima.append(i)
        i = j + 1
    return maxima, minima


def envelope(x: np.ndarray, extrema: list[int]) -> np.ndarray:
    """Natural cubic spline through ``(index, x[index])`` knots, sampled
    at every index of ``x``.

    The spline interpolates the given knots exactly; with two knots it
    degenerates to the straight line between them.  Boundary augmentation
    is the caller's job (see :func:`mirror_extrema`).
    """
    if len(extrema) < 2:
        raise DegenerateEnvelopeError(
            f"need at least 2 knots for an envelope, got {len(extrema)}"
        )
    x = np.asarray(x, dtype=float)
    knots = np.asarray(extrema)
    spline = CubicSpline(knots, x[knots], bc_type="natural")
    return spline(np.arange(len(x)))


def mirror_extrema(x: np.ndarray, extrema: list[int]) -> tuple[list[int], list[float]]:
    """Augment extrema with up to two knots mirrored across each end.

    Returns parallel lists of knot positions (which may lie outside
    ``[0, len(x))``) and knot values.
    """
    n = len(x)
    left = [-i for i in extrema[:2][::-1] if i > 0]
    right = [2 * (n - 1) - i for i in extrema[-2:][::-1] if i < n - 1]
    positions = left + list(extrema) + right
    values = (
        [x[-p] for p in left]
        + [x[p] for p in extrema]
        + [x[2 * (n - 1) - p] for p in right]
    )
    return positions, values


def _envelope_mirrored(x: np.ndarray, extrema: list[int]) -> np.ndarray:
    positions, values = mirror_extrema(x, extrema)
    if len(positions) < 2:
        raise DegenerateEnvelopeError("fewer than 2 knots after mirroring")
    spline = CubicSpline(positions, values, bc_type="natural")
    return spline(np.arange(len(x)))


def sift(
    x: np.ndarray,
    sd_threshold: float = DEFAULT_SD_THRESHOLD,
    max_sift_iters: int = DEFAULT_MAX_SIFT_ITERS,
) -> tuple[np.ndarray, int]:
    """Extract one IMF by repeated envelope-mean subtraction.

    Stops when ``SD = sum((d_prev - d_new)^2 / (d_prev^2 + eps))`` drops
    below ``sd_threshold`` or after ``max_sift_iters`` iterations.  The
    epsilon guard scales with the squared peak of the current detail so
    sifting commutes with amplitude scaling.
    """
    d = np.asarray(x, dtype=float).copy()
    iters = 0
    for _ in range(max_sift_iters):
        maxima, minima = find_extrema(d)
        if len(maxima) < 2 or len(minima) < 2:
            if iters == 0:
                raise DegenerateEnvelopeError(
                    "signal has too few extrema to sift"
                )
            break
        mean_env = (_envelope_mirrored(d, maxima) + _envelope_mirrored(d, minima)) / 2.0
        d_new = d - mean_env
        eps = 1e-12 * max(1.0, float(np.max(np.abs(d))) ** 2)
        sd = float(np.sum((d - d_new) ** 2 / (d**2 + eps)))
        d = d_new
        iters += 1
        if sd < sd_threshold:
            break
    return d, iters


def decompose(
    signal: SampledSignal,
    max_imfs: int = DEFAULT_MAX_IMFS,
    sd_threshold: float = DEFAULT_SD_THRESHOLD,
    max_sift_iters: int = DEFAULT_MAX_SIFT_ITERS,
) -> ImfSet:
    """Full EMD: extract IMFs until the residual stops oscillating.

    Extraction halts when the running residual has fewer than two maxima or
    two minima, or when ``max_imfs`` IMFs have been collected.  The sum of
    all IMFs plus the residual reconstructs the input to rounding error.
    """
    if len(signal) < 16:
        raise TooShortError(
            f"need at least 16 samples to decompose, got {len(signal)}"
        )
    residual = signal.samples.astype(float).copy()
    imfs: list[np.ndarray] = []
    sift_counts: list[int] = []
    while len(imfs) < max_imfs:
        maxima, minima = find_extrema(residual)
        if len(maxima) < 2 or len(minima) < 2:
            break
        try:
            imf, iters = sift(residual, sd_threshold, max_sift_iters)
        except DegenerateEnvelopeError:
            break
        imfs.append(imf)
        sift_counts.append(iters)
        residual = residual - imf
    return ImfSet(imfs=imfs, residual=residual, sift_counts=sift_counts)


def reconstruct(imfset: ImfSet, keep=DEFAULT_KEEP) -> np.ndarray:
    """Sum the selected IMFs (one-based indices; residual excluded).

    Indices in ``keep`` beyond the number of available IMFs are skipped.
    """
    selected = [imfset.imfs[i - 1] for i in keep if 1 <= i <= len(imfset.imfs)]
    if not selected:
        raise ValueError("IMF selection is empty for this decomposition")
    return np.sum(selected, axis=0)
