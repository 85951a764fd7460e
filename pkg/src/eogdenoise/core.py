"""Core signal types, windowed mean removal and window recombination.

Every filter in the toolkit operates on fixed-length, partially overlapping
windows of a uniformly sampled signal.  The pre-processing removes the
per-window arithmetic mean so that downstream filters see an (approximately)
stationary, zero-mean sequence; overlapping denoised windows are merged back
with a linear crossfade to avoid seam discontinuities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInputError, ShapeError

DEFAULT_SAMPLE_RATE = 256.0


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled real-valued sequence with its sampling rate in Hz."""

    samples: np.ndarray
    sample_rate: float = DEFAULT_SAMPLE_RATE

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        object.__setattr__(self, "samples", samples)
        if samples.ndim != 1:
            raise ShapeError("samples must be one-dimensional")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite (no NaN/Inf)")
        if not self.sample_rate > 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate

    def with_samples(self, samples: np.ndarray) -> "SampledSignal":
        """Same sampling rate, new sample values."""
        return SampledSignal(samples, self.sample_rate)


@dataclass(frozen=True)
class WindowPlan:
    """Fixed-length, fixed-overlap segmentation of a signal.

    ``hop`` is derived as ``round(window_len * (1 - overlap_fraction))``.
    """

    window_len: int = 256
    overlap_fraction: float = 0.25
    hop: int = field(init=False)

    def __post_init__(self):
        if self.window_len < 1:
            raise ValueError(f"window_len must be positive, got {self.window_len}")
        if not 0.0 <= self.overlap_fraction < 1.0:
            raise ValueError(
                f"overlap_fraction must be in [0, 1), got {self.overlap_fraction}"
            )
        hop = int(round(self.window_len * (1.0 - self.overlap_fraction)))
        hop = max(hop, 1)
        object.__setattr__(self, "hop", hop)


def plan_windows(signal_len: int, plan: WindowPlan) -> list[tuple[int, int]]:
    """Lay out (start, end) ranges covering ``[0, signal_len)``.

    Consecutive starts differ by ``plan.hop``; the final window is truncated
    at the signal end.  A signal shorter than one window yields a single
    truncated window.

    Raises
    ------
    EmptyInputError
        If ``signal_len`` is zero.
    """
    if signal_len < 1:
        raise EmptyInputError("cannot plan windows for an empty signal")
    ranges: list[tuple[int, int]] = []
    start = 0
    while True:
        end = min(start + plan.window_len, signal_len)
        ranges.append((start, end))
        if end >= signal_len:
            break
        start += plan.hop
    return ranges


def remove_mean(window: np.ndarray) -> np.ndarray:
    """Subtract the arithmetic mean of the window from every sample."""
    window = np.asarray(window, dtype=float)
    if window.size == 0:
        raise EmptyInputError("cannot remove the mean of an empty window")
    return window - window.mean()


def reassemble(
    windows: list[np.ndarray],
    ranges: list[tuple[int, int]],
    signal_len: int,
) -> np.ndarray:
    """Merge (possibly overlapping) windows back into one signal.

    Overlap samples are blended with a linear crossfade: for an overlap of
    ``k`` samples the later window's weight ramps through
    ``(i + 1) / (k + 1)`` for ``i = 0..k-1``.  The blend is computed as
    ``earlier + w * (later - earlier)`` so that windows agreeing on their
    overlap reproduce the shared values bit-for-bit.
    """
    if len(windows) != len(ranges):
        raise ShapeError(
            f"got {len(windows)} windows but {len(ranges)} ranges"
        )
    out = np.zeros(signal_len)
    filled = 0
    for w, (start, end) in zip(windows, ranges):
        w = np.asarray(w, dtype=float)
        if len(w) != end - start:
            raise ShapeError(
                f"window of length {len(w)} does not match range ({start}, {end})"
            )
        if start >= filled:
            out[start:end] = w
        else:
            k = filled - start
            ramp = np.arange(1, k + 1) / (k + 1)
            head = w[:k]
            out[start:filled] = out[start:filled] + ramp * (head - out[start:filled])
            out[filled:end] = w[k:]
        filled = max(filled, end)
    return out


def apply_windowed(
    signal: SampledSignal,
    plan: WindowPlan,
    filter_fn=None,
) -> SampledSignal:
    """Window, mean-remove, optionally filter each window, and reassemble.

    ``filter_fn`` maps one zero-mean window array to an equal-length array;
    ``None`` applies mean removal only.  This is the shared pre-processing
    path of every denoising method.
    """
    ranges = plan_windows(len(signal), plan)
    processed = []
    for start, end in ranges:
        w = remove_mean(signal.samples[start:end])
        if filter_fn is not None:
            w = filter_fn(w)
        processed.append(w)
    merged = reassemble(processed, ranges, len(signal))
    return signal.with_samples(merged)
