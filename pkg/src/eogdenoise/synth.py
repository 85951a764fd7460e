"""Synthetic EOG scenes with known ground truth.

Generates clean signals as a sum of saccades (sigmoid steps between gaze
levels), blinks (raised-cosine bumps) and a slow sinusoidal baseline drift,
then adds seeded white Gaussian noise.  Gaze levels mean-revert: each
saccade steps toward a freshly drawn target rather than accumulating, which
keeps amplitudes inside the physiological envelope and mimics the
back-and-forth scanning of a letter-cancellation task.

All randomness goes through ``numpy.random.default_rng`` (PCG64), so a
given configuration and seed reproduce a corpus bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import SampledSignal

AMPLITUDE_LIMIT_UV = 3500.0
# Gaze levels stay inside this envelope so clean amplitudes (levels plus
# blinks and drift) never leave +/- AMPLITUDE_LIMIT_UV.
LEVEL_LIMIT_UV = 800.0


@dataclass(frozen=True)
class EogSceneConfig:
    duration_s: float = 10.0
    sample_rate: float = 256.0
    saccade_rate: float = 2.0           # events per second
    saccade_amplitude_uv: tuple[float, float] = (100.0, 400.0)
    blink_rate: float = 12.0            # events per minute
    blink_amplitude_uv: tuple[float, float] = (100.0, 300.0)
    drift_amplitude_uv: float = 20.0
    noise_sigma_uv: float | None = None
    target_snr_db: float | None = 10.0
    seed: int = 0

    def __post_init__(self):
        if self.duration_s <= 0:
            raise ValueError("duration_s must be positive")
        if self.sample_rate <= 0:
            raise ValueError("sample_rate must be positive")
        for name in ("saccade_rate", "blink_rate", "drift_amplitude_uv"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


def gen_clean_eog(cfg: EogSceneConfig, return_events: bool = False):
    """Deterministic clean EOG scene for the given config and seed.

    With ``return_events`` also returns the list of saccade onset times in
    seconds.
    """
    rng = np.random.default_rng(cfg.seed)
    n = int(round(cfg.duration_s * cfg.sample_rate))
    t = np.arange(n) / cfg.sample_rate
    x = np.zeros(n)

    events: list[float] = []
    n_saccades = rng.poisson(cfg.saccade_rate * cfg.duration_s)
    onsets = np.sort(rng.uniform(0.0, cfg.duration_s, n_saccades))
    level = 0.0
    lo, hi = cfg.saccade_amplitude_uv
    for onset in onsets:
        step = rng.uniform(lo, hi)
        direction = 1.0 if rng.random() < 0.5 else -1.0
        # step back toward centre whenever the excursion would leave the
        # gaze envelope
        if abs(level + direction * step) > LEVEL_LIMIT_UV:
            direction = -math.copysign(1.0, level)
        amp = direction * step
        width = rng.uniform(0.02, 0.06)  # 20-60 ms transition
        z = np.clip((t - onset) / (width / 8.0), -60.0, 60.0)
        x += amp / (1.0 + np.exp(-z))
        level += amp
        events.append(float(onset))

    n_blinks = rng.poisson(cfg.blink_rate / 60.0 * cfg.duration_s)
    blo, bhi = cfg.blink_amplitude_uv
    for onset in rng.uniform(0.0, cfg.duration_s, n_blinks):
        dur = rng.uniform(0.2, 0.4)
        mask = (t >= onset) & (t < onset + dur)
        phase = (t[mask] - onset) / dur
        x[mask] += rng.uniform(blo, bhi) * 0.5 * (1.0 - np.cos(2.0 * np.pi * phase))

    if cfg.drift_amplitude_uv > 0:
        freq = rng.uniform(0.05, 0.45)  # keep the drift below 0.5 Hz
        phase = rng.uniform(0.0, 2.0 * np.pi)
        x += cfg.drift_amplitude_uv * np.sin(2.0 * np.pi * freq * t + phase)

    np.clip(x, -AMPLITUDE_LIMIT_UV, AMPLITUDE_LIMIT_UV, out=x)
    signal = SampledSignal(x, cfg.sample_rate)
    if return_events:
        return signal, events
    return signal


def add_white_noise(clean: SampledSignal, sigma: float, seed: int) -> SampledSignal:
    """Clean signal plus seeded i.i.d. Gaussian noise of standard deviation sigma."""
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    if sigma == 0.0:
        return clean
    rng = np.random.default_rng(seed)
    return clean.with_samples(clean.samples + rng.normal(0.0, sigma, len(clean)))


def sigma_for_snr(clean: SampledSignal, snr_db: float) -> float:
    """Noise sigma that injects the given sample-power SNR in dB."""
    power = float(np.mean((clean.samples - clean.samples.mean()) ** 2))
    return math.sqrt(power / 10.0 ** (snr_db / 10.0))


def gen_corpus(
    n_signals: int = 20,
    cfg: EogSceneConfig | None = None,
    seeds: list[int] | None = None,
) -> list[tuple[SampledSignal, SampledSignal]]:
    """Deterministic list of (clean, noisy) pairs.

    Each pair uses its own derived seed; the noise sigma comes either from
    ``cfg.noise_sigma_uv`` or from the per-pair power needed to hit
    ``cfg.target_snr_db``.
    """
    if n_signals < 1:
        raise ValueError("n_signals must be >= 1")
    cfg = cfg or EogSceneConfig()
    if seeds is None:
        seeds = [cfg.seed + i for i in range(n_signals)]
    elif len(seeds) != n_signals:
        raise ValueError("seeds must match n_signals")
    pairs = []
    for seed in seeds:
        scene = replace(cfg, seed=seed)
        clean = gen_clean_eog(scene)
        if scene.noise_sigma_uv is not None:
            sigma = scene.noise_sigma_uv
        elif scene.target_snr_db is not None:
            sigma = sigma_for_snr(clean, scene.target_snr_db)
        else:
            sigma = 0.0
        noisy = add_white_noise(clean, sigma, seed + 10_000_019)
        pairs.append((clean, noisy))
    return pairs
