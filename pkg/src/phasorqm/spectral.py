"""Rotation frequencies from the autocorrelation of a trajectory.

The overlap of the evolving pair with its initial value is kept as two real
channels,

    c_re(t) = sum w (x0 x(t) + y0 y(t)),   c_im(t) = sum w (x0 y(t) - y0 x(t)),

which is <Psi(0)|Psi(t)> written out in components. A MINUS-sense rotation
exp(-i omega t) shows up at +omega after the transform below, so eigenstate
energies appear at omega_n = E_n / hbar. The two channels are combined as
c_re - i c_im only to call the FFT; this is the standard one-sided transform
of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal.windows import hann

from .core import UnitSystem
from .errors import NonUniformSampling, TooFewSamples
from .propagator import Trajectory
from .representation import Helicity

MIN_SAMPLES = 64
PEAK_THRESHOLD = 1e-2  # fraction of the strongest peak, in spectral power


@dataclass(frozen=True)
class Correlation:
    times: np.ndarray
    c_re: np.ndarray
    c_im: np.ndarray

    @property
    def dt(self) -> float:
        return float(self.times[1] - self.times[0])


@dataclass(frozen=True)
class Peak:
    omega: float
    amplitude: float
    bin_width: float
    helicity: Helicity = Helicity.MINUS
    """Rotation sense: MINUS for exp(-i omega t), PLUS for exp(+i omega t)."""


@dataclass(frozen=True)
class SpectrumResult:
    peaks: list[Peak]
    omegas: np.ndarray  # signed bin frequencies, ascending
    magnitudes: np.ndarray

    @property
    def bin_width(self) -> float:
        return float(self.omegas[1] - self.omegas[0])

    def peak_omegas(self) -> np.ndarray:
        return np.array([p.omega for p in self.peaks])


def _check_uniform(times):
    steps = np.diff(times)
    if steps.size == 0:
        raise TooFewSamples("need at least two samples")
    if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
        raise NonUniformSampling("trajectory samples are not evenly spaced in time")


def autocorrelation(traj: Trajectory) -> Correlation:
    if len(traj) < 2:
        raise TooFewSamples("need at least two samples")
    _check_uniform(traj.sample_times)
    w = traj.grid.weights
    x0, y0 = traj.psi_x[0], traj.psi_y[0]
    c_re = (traj.psi_x * x0 + traj.psi_y * y0) @ w
    c_im = (traj.psi_y * x0 - traj.psi_x * y0) @ w
    return Correlation(traj.sample_times.copy(), c_re, c_im)


def spectrum(corr: Correlation) -> SpectrumResult:
    """Hann-windowed DFT of the correlation pair with refined peak positions."""
    n = corr.times.size
    if n < MIN_SAMPLES:
        raise TooFewSamples(f"spectrum needs at least {MIN_SAMPLES} samples, got {n}")
    _check_uniform(corr.times)
    dt = corr.dt
    window = hann(n, sym=False)
    signal = window * (corr.c_re - 1j * corr.c_im)
    mag = np.abs(np.fft.fft(signal)) / window.sum()
    freq = 2 * np.pi * np.fft.fftfreq(n, dt)
    bin_width = 2 * np.pi / (n * dt)
    nyquist = np.pi / dt

    left, right = np.roll(mag, 1), np.roll(mag, -1)
    is_max = (mag > left) & (mag >= right) & (mag**2 >= PEAK_THRESHOLD * mag.max() ** 2)
    peaks = []
    for k in np.flatnonzero(is_max):
        a, b, c = np.log(np.maximum([left[k], mag[k], right[k]], np.finfo(float).tiny))
        curv = a - 2 * b + c
        delta = 0.5 * (a - c) / curv if curv < 0 else 0.0
        omega = float(np.clip(freq[k] + delta * bin_width, -nyquist, nyquist))
        amplitude = float(np.exp(b - 0.25 * (a - c) * delta))
        sense = Helicity.MINUS if omega >= 0 else Helicity.PLUS
        peaks.append(Peak(abs(omega), amplitude, bin_width, sense))
    peaks.sort(key=lambda p: (p.omega, p.helicity.value))

    order = np.argsort(freq)
    return SpectrumResult(peaks, freq[order], mag[order])


@dataclass(frozen=True)
class PlanckRow:
    energy: float
    peak_omega: float
    peak_energy: float
    relative_error: float


def planck_check(
    result: SpectrumResult, expected: list[float], units: UnitSystem
) -> list[PlanckRow]:
    """Match each expected energy to the nearest peak via E = hbar omega."""
    rows = []
    peak_energies = units.hbar * result.peak_omegas()
    for energy in expected:
        if peak_energies.size == 0:
            rows.append(PlanckRow(energy, float("nan"), float("nan"), float("inf")))
            continue
        i = int(np.argmin(np.abs(peak_energies - energy)))
        rel = abs(peak_energies[i] - energy) / abs(energy) if energy else abs(peak_energies[i])
        rows.append(PlanckRow(energy, result.peaks[i].omega, float(peak_energies[i]), float(rel)))
    return rows
