"""Analytic vector wavefunctions and the complex <-> vector mapping.

A complex wavefunction ``Psi_c`` corresponds to the real pair
``(psi_x, psi_y) = (Re Psi_c, Im Psi_c)``. The two helicities are related by
``psi_y -> -psi_y``, which is complex conjugation on the complex side.

Helicity MINUS is the conventional ``exp[-i(omega t - k z)]`` direction of
rotation; helicity PLUS is its conjugate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import ComplexField, Grid1D, UnitSystem, VectorField, normalize
from .errors import BadQuantumNumber, IncommensurateWave


class Helicity(enum.Enum):
    PLUS = 1
    MINUS = -1

    @property
    def sign(self) -> int:
        return self.value

    def flip(self) -> "Helicity":
        return Helicity.MINUS if self is Helicity.PLUS else Helicity.PLUS

    @classmethod
    def parse(cls, text: str) -> "Helicity":
        key = str(text).strip().lower()
        if key in ("plus", "+", "+1", "1"):
            return cls.PLUS
        if key in ("minus", "-", "-1"):
            return cls.MINUS
        raise ValueError(f"unknown helicity {text!r}")


@dataclass(frozen=True)
class WaveParams:
    amplitude: float
    k: float
    omega: float
    helicity: Helicity = Helicity.PLUS

    def __post_init__(self):
        if self.amplitude < 0:
            raise ValueError("amplitude must be >= 0")
        if self.omega < 0:
            raise ValueError("omega must be >= 0")


def vector_from_complex(c: ComplexField) -> VectorField:
    return VectorField(c.re, c.im, c.grid)


def complex_from_vector(v: VectorField) -> ComplexField:
    return ComplexField(v.psi_x, v.psi_y, v.grid)


def helicity_flip(v: VectorField) -> VectorField:
    return VectorField(v.psi_x, -v.psi_y, v.grid)


def plane_wave(p: WaveParams, grid: Grid1D, t: float = 0.0) -> VectorField:
    """Circularly polarized travelling wave on a periodic grid."""
    if not grid.periodic:
        raise IncommensurateWave("plane waves need a periodic grid")
    turns = p.k * grid.length / (2 * np.pi)
    if abs(turns - round(turns)) > 1e-9 * max(1.0, abs(turns)):
        raise IncommensurateWave(
            f"k*length = {p.k * grid.length:.12g} is not a multiple of 2*pi"
        )
    phase = p.omega * t - p.k * grid.z
    return VectorField(
        p.amplitude * np.cos(phase), p.helicity.sign * p.amplitude * np.sin(phase), grid
    )


def box_energy(n: int, L: float, units: UnitSystem) -> float:
    """Particle-in-a-box level hbar^2 (n pi / L)^2 / 2m."""
    if int(n) != n or n < 1:
        raise BadQuantumNumber(f"n must be a positive integer, got {n!r}")
    if L <= 0:
        raise ValueError("box length must be positive")
    k = n * np.pi / L
    return units.hbar**2 * k**2 / (2 * units.mass)


def box_energy_discrete(n: int, grid: Grid1D, units: UnitSystem) -> float:
    """Exact eigenvalue of the 3-point Dirichlet Hamiltonian for sin(n pi z / L)."""
    _check_box_n(n, grid)
    dz = grid.spacing
    return units.hbar**2 / (units.mass * dz**2) * (1 - np.cos(n * np.pi * dz / grid.length))


def _check_box_n(n, grid):
    if int(n) != n or n < 1:
        raise BadQuantumNumber(f"n must be a positive integer, got {n!r}")
    # at least two samples per half wavelength
    if n >= grid.n_points - 1:
        raise BadQuantumNumber(
            f"n={n} is not resolved by a {grid.n_points}-point grid (need n < {grid.n_points - 1})"
        )


def box_state(
    n: int,
    helicity: Helicity,
    grid: Grid1D,
    t: float,
    units: UnitSystem,
    *,
    amplitude: float | None = None,
    rest_mass: bool = False,
) -> VectorField:
    """Standing wave sin(n pi z/L) times a phasor rotating at omega_n.

    ``amplitude`` defaults to sqrt(2/L) (unit norm). With ``rest_mass`` the
    rotation rate includes the offset m c^2 / hbar.
    """
    if grid.periodic:
        raise ValueError("box states need a Dirichlet grid")
    _check_box_n(n, grid)
    energy = box_energy(n, grid.length, units)
    if rest_mass:
        energy += rest_mass_offset(units)
    omega = energy / units.hbar
    amp = np.sqrt(2.0 / grid.length) if amplitude is None else amplitude
    envelope = amp * np.sin(n * np.pi * grid.z / grid.length)
    envelope[0] = envelope[-1] = 0.0
    return VectorField(
        envelope * np.cos(omega * t), helicity.sign * envelope * np.sin(omega * t), grid
    )


def gaussian_packet(
    grid: Grid1D,
    center: float,
    width: float,
    k: float = 0.0,
    helicity: Helicity = Helicity.MINUS,
) -> VectorField:
    """Unit-norm Gaussian envelope carrying mean wavenumber ``k``.

    With helicity MINUS the packet is exp(+i k z) on the complex side, so it
    moves towards +z under the standard Schrodinger equation.
    """
    z = grid.z
    env = np.exp(-((z - center) ** 2) / (4 * width**2))
    phase = k * (z - center)
    x = env * np.cos(phase)
    y = -helicity.sign * env * np.sin(phase)
    if not grid.periodic:
        x[0] = x[-1] = y[0] = y[-1] = 0.0
    return normalize(VectorField(x, y, grid))


def de_broglie(E: float, p: float, units: UnitSystem) -> tuple[float, float]:
    """Angular frequency and wavenumber from E = hbar omega, p = hbar k."""
    return E / units.hbar, p / units.hbar


def rest_mass_offset(units: UnitSystem) -> float:
    return units.mass * units.c**2
