"""EOG denoising toolkit.

Four interchangeable denoising methods (FIR bandpass, EMD, SWT, FIR median
hybrid) over a shared windowed pre-processing pipeline, scored with an
eigenvalue-based SNR estimator on synthetic ground-truth corpora.
"""

__version__ = "0.1.0"

from .core import SampledSignal, WindowPlan, plan_windows, remove_mean, reassemble
from .bandpass import FirCoefficients, compensate_delay, convolve, design_firls
from .emd import ImfSet, decompose, envelope, find_extrema, reconstruct, sift
from .swt import SwtDecomposition, iswt_reconstruct, swt_decompose, swt_denoise, threshold_coeffs
from .fmh import FmhConfig, fmh_filter, subfilter_outputs, weighted_median5
from .snr import SnrReport, covariance_matrix, evaluate_method, max_eigenvalue, residual_noise, snr_db
from .synth import EogSceneConfig, add_white_noise, gen_clean_eog, gen_corpus, sigma_for_snr
from .pipeline import BenchmarkReport, RunConfig, denoise_signal, run_pipeline

__all__ = [
    "SampledSignal", "WindowPlan", "plan_windows", "remove_mean", "reassemble",
    "FirCoefficients", "design_firls", "convolve", "compensate_delay",
    "ImfSet", "find_extrema", "envelope", "sift", "decompose", "reconstruct",
    "SwtDecomposition", "swt_decompose", "threshold_coeffs", "iswt_reconstruct", "swt_denoise",
    "FmhConfig", "subfilter_outputs", "weighted_median5", "fmh_filter",
    "SnrReport", "residual_noise", "covariance_matrix", "max_eigenvalue", "snr_db", "evaluate_method",
    "EogSceneConfig", "gen_clean_eog", "add_white_noise", "sigma_for_snr", "gen_corpus",
    "RunConfig", "BenchmarkReport", "run_pipeline", "denoise_signal",
]
