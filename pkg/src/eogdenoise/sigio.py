"""CSV signal I/O, report serialization and flat config files."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict

import numpy as np

from .core import SampledSignal
from .errors import EmptyInputError
from .pipeline import BenchmarkReport

SIGNAL_HEADER = "time_s,amplitude_uv"
MAX_JITTER = 0.01  # 1% of the median sample spacing

REPORT_FIELDS = (
    "method",
    "mean_snr_db",
    "std_snr_db",
    "mean_runtime_ms",
    "n_signals",
    "failures",
)
TIMING_FIELDS = ("mean_runtime_ms",)


def read_signal_csv(path: str, fs: float | None = None) -> SampledSignal:
    """Load a signal from CSV.

    Two-column files (``time_s,amplitude_uv``, header required) must be
    uniformly sampled within 1% jitter; the sample rate is inferred from
    the median spacing.  One-column files (``amplitude_uv``) need an
    explicit ``fs``.
    """
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise EmptyInputError(f"{path}: file is empty")
    header = [c.strip() for c in rows[0]]
    if header == ["time_s", "amplitude_uv"]:
        two_col = True
    elif header == ["amplitude_uv"]:
        two_col = False
        if fs is None:
            raise ValueError(f"{path}: one-column CSV requires a sample rate (--fs)")
    else:
        raise ValueError(
            f"{path}: expected header '{SIGNAL_HEADER}' or 'amplitude_uv', got {rows[0]}"
        )
    times, amps = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        try:
            if two_col:
                times.append(float(row[0]))
                amps.append(float(row[1]))
            else:
                amps.append(float(row[0]))
        except (ValueError, IndexError):
            raise ValueError(f"{path}:{lineno}: non-numeric row {row!r}") from None
    if not amps:
        raise EmptyInputError(f"{path}: no data rows")
    if two_col:
        if len(times) >= 2:
            dt = np.diff(times)
            med = float(np.median(dt))
            if med <= 0:
                raise ValueError(f"{path}: timestamps are not increasing")
            if float(np.max(np.abs(dt - med))) > MAX_JITTER * med:
                raise ValueError(
                    f"{path}: non-uniform sampling (jitter above {MAX_JITTER:.0%})"
                )
            fs = 1.0 / med
        elif fs is None:
            raise ValueError(f"{path}: cannot infer sample rate from one row")
    return SampledSignal(amps, fs)


def write_signal_csv(signal: SampledSignal, path: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(SIGNAL_HEADER + "\n")
        for i, v in enumerate(signal.samples):
            fh.write(f"{i / signal.sample_rate:.9f},{v:.6f}\n")


def _format_value(value) -> str:
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.6g}"
    return str(value)


def render_report(report: BenchmarkReport, fmt: str = "table") -> str:
    """Serialize a benchmark report as text table, CSV or JSON lines."""
    if fmt == "table":
        out = io.StringIO()
        out.write(f"# eogdenoise {report.version}\n")
        out.write(f"# corpus: {report.corpus}\n")
        out.write(f"# snr mode: {report.snr_mode} (embedding m={report.embed_m})\n")
        out.write(f"# {report.note}\n")
        out.write(f"{'Method':<10}{'SNR (dB)':>12}{'Time (ms)':>12}{'Failures':>10}\n")
        for row in report.rows:
            out.write(
                f"{row.method:<10}{_format_value(row.mean_snr_db):>12}"
                f"{_format_value(row.mean_runtime_ms):>12}{row.failures:>10}\n"
            )
        return out.getvalue()
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        for row in report.rows:
            writer.writerow([_format_value(getattr(row, f)) for f in REPORT_FIELDS])
        return out.getvalue()
    if fmt == "jsonl":
        lines = []
        meta = {
            "corpus": report.corpus,
            "snr_mode": report.snr_mode,
            "embed_m": report.embed_m,
            "seed": report.seed,
            "version": report.version,
            "config": report.config,
        }
        lines.append(json.dumps({"meta": meta}, sort_keys=True))
        for row in report.rows:
            d = asdict(row)
            d["mean_snr_db"] = _format_value(d["mean_snr_db"])
            d["std_snr_db"] = _format_value(d["std_snr_db"])
            lines.append(json.dumps(d, sort_keys=True))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def write_report(report: BenchmarkReport, path: str, fmt: str = "table") -> None:
    text = render_report(report, fmt)
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def read_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` config file; '#' starts a comment."""
    values: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values
