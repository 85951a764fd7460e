"""Command-line interface.

Subcommands: ``synth`` (emit a ground-truth corpus), ``denoise`` (one file,
one method), ``bench`` (full benchmark table) and ``plot-data`` (per-sample
CSV plus rendered figures).  Option precedence is flags > config file >
``EOG_DENOISE_SEED`` environment variable > built-in defaults.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .emd import decompose as emd_decompose
from .pipeline import METHOD_NAMES, RunConfig, denoise_signal, run_pipeline
from .sigio import read_config_file, read_signal_csv, render_report, write_report, write_signal_csv
from .synth import EogSceneConfig, gen_corpus

ENV_SEED = "EOG_DENOISE_SEED"


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--seed", type=int, help="random seed")
    p.add_argument("--window", type=int, help="window length in samples")
    p.add_argument("--overlap", type=float, help="window overlap fraction")
    p.add_argument("--snr-mode", choices=["true", "proxy"], help="SNR scoring mode")
    p.add_argument("--embed-m", type=int, help="covariance embedding dimension")
    p.add_argument("--emd-keep", help="IMF selection, e.g. 2:9")
    p.add_argument("--swt-wavelet", help="wavelet name (haar, db2, db4, db8, sym4)")
    p.add_argument("--swt-mode", choices=["soft", "hard"], help="threshold mode")
    p.add_argument("--fmh-L", type=int, dest="fmh_L", help="FMH subfilter half-length")
    p.add_argument("--fir-band", help="FIR band edges, e.g. 0.02:0.5 (of Nyquist)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eog-denoise", description="EOG denoising and SNR benchmarking"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic ground-truth corpus")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--signals", type=int)
    p.add_argument("--duration", type=float)
    p.add_argument("--input-snr", type=float, help="injected SNR in dB")
    _add_common(p)

    p = sub.add_parser("denoise", help="denoise one CSV file with one method")
    p.add_argument("--input", required=True)
    p.add_argument("--fs", type=float, help="sample rate for one-column CSV")
    p.add_argument("--method", choices=list(METHOD_NAMES), required=True)
    p.add_argument("--out", required=True, help="denoised CSV path")
    p.add_argument("--fig", help="optional overlay figure path (PNG)")
    _add_common(p)

    p = sub.add_parser("bench", help="run the full benchmark table")
    p.add_argument("--input", help="real recording CSV (default: synthetic corpus)")
    p.add_argument("--fs", type=float)
    p.add_argument("--method", default="all", help="fir|emd|swt|fmh|all or comma list")
    p.add_argument("--signals", type=int)
    p.add_argument("--duration", type=float)
    p.add_argument("--input-snr", type=float)
    p.add_argument("--out", help="report path (default: stdout)")
    p.add_argument("--format", choices=["table", "csv", "jsonl"], default="table")
    p.add_argument("--workers", type=int, help="corpus-level parallelism")
    p.add_argument("--fig", help="optional comparison figure path (PNG)")
    _add_common(p)

    p = sub.add_parser("plot-data", help="emit per-sample CSV and figures")
    p.add_argument("--input", help="recording CSV (default: one synthetic signal)")
    p.add_argument("--fs", type=float)
    p.add_argument("--method", choices=list(METHOD_NAMES), default="emd")
    p.add_argument("--duration", type=float)
    p.add_argument("--input-snr", type=float)
    p.add_argument("--out", required=True, help="per-sample CSV path")
    p.add_argument("--fig", help="overlay figure path (default: alongside --out)")
    _add_common(p)

    return parser


def _merged_option(args, config: dict, key: str, cast, default):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in config:
        return cast(config[key])
    return default


def _parse_range(text: str) -> tuple[int, int]:
    lo, hi = text.replace(":", " ").replace("-", " ").split()
    return int(lo), int(hi)


def _parse_band(text: str) -> tuple[float, float]:
    lo, hi = text.replace(":", " ").split()
    return float(lo), float(hi)


def make_run_config(args, methods: tuple[str, ...]) -> RunConfig:
    config = read_config_file(args.config) if getattr(args, "config", None) else {}
    env_seed = os.environ.get(ENV_SEED)
    seed_default = int(env_seed) if env_seed is not None else 0
    keep = _merged_option(args, config, "emd_keep", str, None)
    band = _merged_option(args, config, "fir_band", str, None)
    return RunConfig(
        methods=methods,
        input_path=getattr(args, "input", None),
        fs=getattr(args, "fs", None),
        n_signals=_merged_option(args, config, "signals", int, 20),
        duration_s=_merged_option(args, config, "duration", float, 10.0),
        target_snr_db=_merged_option(args, config, "input_snr", float, 10.0),
        window_len=_merged_option(args, config, "window", int, 256),
        overlap=_merged_option(args, config, "overlap", float, 0.25),
        snr_mode=_merged_option(args, config, "snr_mode", str, "true"),
        embed_m=_merged_option(args, config, "embed_m", int, 1),
        seed=_merged_option(args, config, "seed", int, seed_default),
        workers=_merged_option(args, config, "workers", int, os.cpu_count() or 1),
        emd_keep=_parse_range(keep) if keep else (2, 9),
        swt_wavelet=_merged_option(args, config, "swt_wavelet", str, "db4"),
        swt_mode=_merged_option(args, config, "swt_mode", str, "soft"),
        fmh_half_len=_merged_option(args, config, "fmh_L", int, 16),
        fir_band=_parse_band(band) if band else (0.02, 0.5),
    )


def cmd_synth(args) -> int:
    cfg = make_run_config(args, METHOD_NAMES)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    scene = EogSceneConfig(
        duration_s=cfg.duration_s, target_snr_db=cfg.target_snr_db, seed=cfg.seed
    )
    pairs = gen_corpus(cfg.n_signals, scene)
    for i, (clean, noisy) in enumerate(pairs):
        write_signal_csv(clean, str(out_dir / f"clean_{i:03d}.csv"))
        write_signal_csv(noisy, str(out_dir / f"noisy_{i:03d}.csv"))
    print(f"wrote {len(pairs)} (clean, noisy) pairs to {out_dir}")
    return 0


def cmd_denoise(args) -> int:
    cfg = make_run_config(args, (args.method,))
    noisy = read_signal_csv(args.input, fs=args.fs)
    denoised, failures = denoise_signal(noisy, args.method, cfg)
    write_signal_csv(denoised, args.out)
    if failures:
        print(f"warning: {failures} window(s) passed through unfiltered", file=sys.stderr)
    if args.fig:
        from .plots import save_signal_overlay

        save_signal_overlay(
            {"input": noisy, f"denoised ({args.method})": denoised},
            args.fig,
            title=f"{args.method} denoising of {args.input}",
        )
    print(f"wrote denoised signal to {args.out}")
    return 0


def _parse_methods(text: str) -> tuple[str, ...]:
    if text == "all":
        return METHOD_NAMES
    methods = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = set(methods) - set(METHOD_NAMES)
    if unknown:
        raise ValueError(f"unknown methods: {sorted(unknown)}")
    return methods


def cmd_bench(args) -> int:
    cfg = make_run_config(args, _parse_methods(args.method))
    report = run_pipeline(cfg)
    if args.out:
        write_report(report, args.out, args.format)
        print(f"wrote report to {args.out}")
    else:
        print(render_report(report, args.format), end="")
    if args.fig:
        from .plots import save_benchmark_figure

        save_benchmark_figure(report, args.fig)
    ok = all(np.isfinite(r.mean_snr_db) or r.method == "none" for r in report.rows)
    return 0 if ok else 1


def cmd_plot_data(args) -> int:
    cfg = make_run_config(args, (args.method,))
    if args.input:
        noisy = read_signal_csv(args.input, fs=args.fs)
        clean = None
    else:
        scene = EogSceneConfig(
            duration_s=cfg.duration_s, target_snr_db=cfg.target_snr_db, seed=cfg.seed
        )
        clean, noisy = gen_corpus(1, scene)[0]
    denoised, _ = denoise_signal(noisy, args.method, cfg)

    columns: dict[str, np.ndarray] = {"raw": noisy.samples, "denoised": denoised.samples}
    if clean is not None:
        columns["clean"] = clean.samples
    imfset = None
    if args.method == "emd":
        from .pipeline import BASELINE_NAME  # reuse pre-processing path

        base, _ = denoise_signal(noisy, BASELINE_NAME, cfg)
        imfset = emd_decompose(base, max_imfs=cfg.emd_max_imfs)
        for i, imf in enumerate(imfset.imfs, start=1):
            columns[f"imf_{i}"] = imf
        columns["emd_residual"] = imfset.residual

    with open(args.out, "w") as fh:
        fh.write("time_s," + ",".join(columns) + "\n")
        t = np.arange(len(noisy)) / noisy.sample_rate
        for i in range(len(noisy)):
            fh.write(
                f"{t[i]:.9f}," + ",".join(f"{col[i]:.6f}" for col in columns.values()) + "\n"
            )
    fig_path = args.fig or str(Path(args.out).with_suffix(".png"))
    from .plots import save_imf_grid, save_signal_overlay

    overlay = {"raw": noisy, "denoised": denoised}
    if clean is not None:
        overlay["clean"] = clean
    save_signal_overlay(overlay, fig_path, title=f"{args.method} denoising")
    if imfset is not None:
        save_imf_grid(imfset, noisy.sample_rate, str(Path(fig_path).with_name(
            Path(fig_path).stem + "_imfs.png"
        )))
    print(f"wrote plot data to {args.out} and figure(s) to {fig_path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "synth": cmd_synth,
        "denoise": cmd_denoise,
        "bench": cmd_bench,
        "plot-data": cmd_plot_data,
    }
    try:
        return handlers[args.command](args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
