"""Matplotlib figure output for benchmark reports and denoised signals."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .core import SampledSignal
from .emd import ImfSet
from .pipeline import BenchmarkReport


def save_benchmark_figure(report: BenchmarkReport, path: str) -> None:
    """Bar chart of per-method mean SNR with runtime annotations."""
    rows = [r for r in report.rows if np.isfinite(r.mean_snr_db)]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    names = [r.method for r in rows]
    snrs = [r.mean_snr_db for r in rows]
    errs = [r.std_snr_db for r in rows]
    bars = ax.bar(names, snrs, yerr=errs, capsize=4, color="#4878a8")
    for bar, row in zip(bars, rows):
        ax.annotate(
            f"{row.mean_runtime_ms:.2f} ms",
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center", va="bottom", fontsize=8,
        )
    ax.set_ylabel("estimated SNR (dB)")
    ax.set_title(f"Denoising comparison ({report.snr_mode}, {report.corpus})", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_signal_overlay(
    signals: dict[str, SampledSignal], path: str, title: str = ""
) -> None:
    """Overlay several equal-length signals on one time axis."""
    fig, ax = plt.subplots(figsize=(9.0, 3.6))
    for label, sig in signals.items():
        t = np.arange(len(sig)) / sig.sample_rate
        ax.plot(t, sig.samples, label=label, linewidth=0.8)
    ax.set_xlabel("time (s)")
    ax.set_ylabel("amplitude (µV)")
    if title:
        ax.set_title(title, fontsize=9)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_imf_grid(imfset: ImfSet, sample_rate: float, path: str) -> None:
    """Stacked plot of every IMF plus the residual."""
    count = len(imfset.imfs) + 1
    fig, axes = plt.subplots(count, 1, figsize=(9.0, 1.1 * count), sharex=True)
    axes = np.atleast_1d(axes)
    for i, imf in enumerate(imfset.imfs):
        t = np.arange(len(imf)) / sample_rate
        axes[i].plot(t, imf, linewidth=0.6)
        axes[i].set_ylabel(f"IMF {i + 1}", fontsize=7)
    t = np.arange(len(imfset.residual)) / sample_rate
    axes[-1].plot(t, imfset.residual, linewidth=0.6, color="#a84848")
    axes[-1].set_ylabel("residual", fontsize=7)
    axes[-1].set_xlabel("time (s)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
