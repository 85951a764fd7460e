"""Stationary (undecimated) wavelet transform denoising.

Decomposition follows the a-trous scheme: at level ``j`` the analysis
filters are used with their taps spread ``2**(j-1)`` samples apart and no
decimation takes place, so every coefficient array keeps the (padded)
signal length and the transform commutes with circular shifts.  The input
is periodically extended to the next power of two, never below
``2**levels``.

For an orthonormal filter pair ``|H(w)|^2 + |G(w)|^2 = 2`` holds at every
frequency, so applying the adjoint of each analysis stage and halving
inverts the transform exactly; this is equivalent to the usual averaging of
the even/odd phase inverses.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import SampledSignal
from .errors import ShapeError

DEFAULT_LEVELS = 6
DEFAULT_WAVELET = "db4"

# Orthonormal scaling (lowpass) filters.  Values refined to machine
# precision against the orthonormality and vanishing-moment conditions.
WAVELETS: dict[str, np.ndarray] = {
    "haar": np.array([0.7071067811865476, 0.7071067811865476]),
    "db2": np.array([
        4.82962913144534156e-01, 8.36516303737807942e-01,
        2.24143868042013389e-01, -1.29409522551260370e-01,
    ]),
    "db4": np.array([
        2.30377813308896506e-01, 7.14846570552915561e-01,
        6.30880767929858921e-01, -2.79837694168598022e-02,
        -1.87034811719093114e-01, 3.08413818355607675e-02,
        3.28830116668852104e-02, -1.05974017850690369e-02,
    ]),
    "db8": np.array([
        5.44158422431155822e-02, 3.12871590914338638e-01,
        6.75630736297314849e-01, 5.85354683654161212e-01,
        -1.58291052564077453e-02, -2.84015542961536083e-01,
        4.72484573944500282e-04, 1.28747426620471533e-01,
        -1.73693010018195239e-02, -4.40882539307905219e-02,
        1.39810279174011082e-02, 8.74609404740429516e-03,
        -4.87035299345185344e-03, -3.91740373376705977e-04,
        6.75449406450560766e-04, -1.17476784124778534e-04,
    ]),
    "sym4": np.array([
        -7.57657147895024752e-02, -2.96355276460022118e-02,
        4.97618667632776013e-01, 8.03738751805131768e-01,
        2.97857795605305120e-01, -9.92195435766334982e-02,
        -1.26039672620311283e-02, 3.22231006040514315e-02,
    ]),
}


def _filters(wavelet: str) -> tuple[np.ndarray, np.ndarray]:
    try:
        h = WAVELETS[wavelet]
    except KeyError:
        raise ValueError(
            f"unknown wavelet {wavelet!r}; choose from {sorted(WAVELETS)}"
        ) from None
    g = h[::-1].copy()
    g[1::2] *= -1.0  # quadrature mirror: g[k] = (-1)^k h[L-1-k]
    return h, g


@dataclass(frozen=True)
class SwtDecomposition:
    """Per-level detail arrays (level 1 = finest) plus the approximation.

    All coefficient arrays share the padded length, a multiple of
    ``2**levels``; ``original_len`` records how much of a reconstruction
    is the actual signal.
    """

    details: list[np.ndarray]
    approximation: np.ndarray
    wavelet: str
    original_len: int
    sample_rate: float = 256.0
    extension: str = "periodic"

    @property
    def levels(self) -> int:
        return len(self.details)

    @property
    def padded_len(self) -> int:
        return len(self.approximation)


def swt_decompose(
    signal: SampledSignal,
    levels: int = DEFAULT_LEVELS,
    wavelet: str = DEFAULT_WAVELET,
) -> SwtDecomposition:
    """Undecimated wavelet decomposition with periodic extension."""
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    if len(signal) == 0:
        raise ShapeError("cannot decompose an empty signal")
    h, g = _filters(wavelet)
    x = signal.samples.astype(float)
    # periodic extension to the next power of two (at least 2**levels)
    target = max(1 << levels, 1 << (len(x) - 1).bit_length())
    pad = target - len(x)
    if pad:
        reps = int(np.ceil(pad / len(x)))
        x = np.concatenate([x, np.tile(x, reps)[:pad]])
    approx = x
    details: list[np.ndarray] = []
    for j in range(levels):
        step = 1 << j
        new_approx = np.zeros_like(approx)
        detail = np.zeros_like(approx)
        for k in range(len(h)):
            rolled = np.roll(approx, -step * k)
            new_approx += h[k] * rolled
            detail += g[k] * rolled
        details.append(detail)
        approx = new_approx
    return SwtDecomposition(
        details=details,
        approximation=approx,
        wavelet=wavelet,
        original_len=len(signal),
        sample_rate=signal.sample_rate,
    )


def threshold_coeffs(
    dec: SwtDecomposition,
    mode: str = "soft",
    multiplier: float = 1.0,
) -> SwtDecomposition:
    """Shrink detail coefficients with the universal threshold.

    The noise scale is the MAD estimate from the finest details,
    ``sigma = median(|d1|) / 0.6745``, and the threshold is
    ``multiplier * sigma * sqrt(2 ln N)`` with ``N`` the padded length.
    The approximation is left untouched.
    """
    if mode not in ("soft", "hard"):
        raise ValueError(f"mode must be 'soft' or 'hard', got {mode!r}")
    sigma = float(np.median(np.abs(dec.details[0]))) / 0.6745
    thresh = multiplier * sigma * np.sqrt(2.0 * np.log(dec.padded_len))
    if thresh == 0.0:
        return dec
    if mode == "soft":
        new_details = [
            np.sign(d) * np.maximum(np.abs(d) - thresh, 0.0) for d in dec.details
        ]
    else:
        new_details = [np.where(np.abs(d) > thresh, d, 0.0) for d in dec.details]
    return replace(dec, details=new_details)


def iswt_reconstruct(dec: SwtDecomposition) -> SampledSignal:
    """Invert the a-trous decomposition and trim to the original length."""
    h, g = _filters(dec.wavelet)
    n = dec.padded_len
    for d in dec.details:
        if len(d) != n:
            raise ShapeError("coefficient arrays have mismatched lengths")
    approx = dec.approximation
    for j in range(dec.levels - 1, -1, -1):
        step = 1 << j
        detail = dec.details[j]
        merged = np.zeros(n)
        for k in range(len(h)):
            merged += h[k] * np.roll(approx, step * k)
            merged += g[k] * np.roll(detail, step * k)
        approx = merged / 2.0
    return SampledSignal(approx[: dec.original_len], sample_rate=dec.sample_rate)


def swt_denoise(
    signal: SampledSignal,
    levels: int = DEFAULT_LEVELS,
    wavelet: str = DEFAULT_WAVELET,
    mode: str = "soft",
    multiplier: float = 1.0,
) -> SampledSignal:
    """Decompose, threshold and reconstruct in one call."""
    dec = swt_decompose(signal, levels=levels, wavelet=wavelet)
    dec = threshold_coeffs(dec, mode=mode, multiplier=multiplier)
    out = iswt_reconstruct(dec)
    return signal.with_samples(out.samples)
