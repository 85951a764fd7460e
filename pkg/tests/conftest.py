"""Shared fixtures and independent oracle implementations.

The oracles here deliberately avoid the package's own code paths: FFT
convolution instead of time-domain, power iteration instead of eigvalsh,
a hand-rolled tridiagonal solver instead of scipy splines, and a direct
upsampled-filter convolution instead of the rolled a-trous loop.  Unit and
acceptance tests check the library against these.
"""

import numpy as np
import pytest

# one line per acceptance criterion, shown after the run summary
ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def fft_convolve(x: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Full linear convolution via zero-padded DFT multiplication."""
    n = len(x) + len(h) - 1
    size = 1 << (n - 1).bit_length()
    X = np.fft.rfft(x, size)
    H = np.fft.rfft(h, size)
    return np.fft.irfft(X * H, size)[:n]


def power_iteration(C: np.ndarray, iters: int = 60, seed: int = 0) -> float:
    """Largest (rightmost) eigenvalue of a symmetric matrix by power iteration.

    A diagonal shift makes every eigenvalue positive so the rightmost one
    dominates in modulus; the iteration then runs in square-and-normalize
    form (``M <- M @ M / ||M||``), which doubles the effective iteration
    count per pass and converges even when the top eigenvalues nearly
    coincide.  The eigenvalue comes from the Rayleigh quotient of a random
    vector pushed through the converged power of the matrix.
    """
    C = np.asarray(C, dtype=float)
    shift = float(np.max(np.sum(np.abs(C), axis=1)))  # Gershgorin bound
    A = C + shift * np.eye(len(C))
    M = A / np.linalg.norm(A)
    for _ in range(iters):
        M = M @ M
        M /= np.linalg.norm(M)
    v = M @ np.random.default_rng(seed).normal(size=len(C))
    v /= np.linalg.norm(v)
    return float(v @ A @ v) - shift


def naive_covariance(x: np.ndarray, m: int) -> np.ndarray:
    """(1/K) sum_k x[k+i] x[k+j] by explicit double loop."""
    K = len(x) - m + 1
    C = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            s = 0.0
            for k in range(K):
                s += x[k + i] * x[k + j]
            C[i, j] = s / K
    return C


def natural_spline_eval(knots_x, knots_y, query) -> np.ndarray:
    """Natural cubic spline via the standard tridiagonal system for the
    second derivatives (Thomas algorithm), evaluated at ``query``.
    """
    xs = np.asarray(knots_x, dtype=float)
    ys = np.asarray(knots_y, dtype=float)
    n = len(xs)
    h = np.diff(xs)
    # tridiagonal system for interior second derivatives M[1..n-2]
    a = np.zeros(n)
    b = np.ones(n)
    c = np.zeros(n)
    d = np.zeros(n)
    for i in range(1, n - 1):
        a[i] = h[i - 1]
        b[i] = 2.0 * (h[i - 1] + h[i])
        c[i] = h[i]
        d[i] = 6.0 * ((ys[i + 1] - ys[i]) / h[i] - (ys[i] - ys[i - 1]) / h[i - 1])
    # forward sweep
    for i in range(1, n):
        w = a[i] / b[i - 1]
        b[i] -= w * c[i - 1]
        d[i] -= w * d[i - 1]
    M = np.zeros(n)
    M[n - 1] = d[n - 1] / b[n - 1]
    for i in range(n - 2, -1, -1):
        M[i] = (d[i] - c[i] * M[i + 1]) / b[i]
    M[0] = M[n - 1] = 0.0  # natural boundary

    query = np.atleast_1d(np.asarray(query, dtype=float))
    out = np.empty_like(query)
    idx = np.clip(np.searchsorted(xs, query) - 1, 0, n - 2)
    for k, (q, i) in enumerate(zip(query, idx)):
        hi = h[i]
        t = xs[i + 1] - q
        u = q - xs[i]
        out[k] = (
            M[i] * t**3 / (6 * hi)
            + M[i + 1] * u**3 / (6 * hi)
            + (ys[i] / hi - M[i] * hi / 6) * t
            + (ys[i + 1] / hi - M[i + 1] * hi / 6) * u
        )
    return out


def spectral_centroid(x: np.ndarray, sample_rate: float) -> float:
    """Power-weighted mean frequency from the one-sided DFT."""
    spec = np.abs(np.fft.rfft(x - np.mean(x))) ** 2
    freqs = np.fft.rfftfreq(len(x), 1.0 / sample_rate)
    total = np.sum(spec)
    if total == 0:
        return 0.0
    return float(np.sum(freqs * spec) / total)


def atrous_decompose(x: np.ndarray, h: np.ndarray, g: np.ndarray, levels: int):
    """Reference undecimated transform: circular convolution with filters
    explicitly upsampled by zero insertion, one index at a time.
    """
    n = len(x)
    approx = np.asarray(x, dtype=float).copy()
    details = []
    for j in range(levels):
        hj = np.zeros((len(h) - 1) * (1 << j) + 1)
        gj = np.zeros_like(hj)
        hj[:: 1 << j] = h
        gj[:: 1 << j] = g
        new_approx = np.zeros(n)
        detail = np.zeros(n)
        for i in range(n):
            sa = 0.0
            sd = 0.0
            for k in range(len(hj)):
                sa += hj[k] * approx[(i + k) % n]
                sd += gj[k] * approx[(i + k) % n]
            new_approx[i] = sa
            detail[i] = sd
        details.append(detail)
        approx = new_approx
    return details, approx


def pearson(a: np.ndarray, b: np.ndarray) -> float:
    a = a - np.mean(a)
    b = b - np.mean(b)
    return float(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b)))
