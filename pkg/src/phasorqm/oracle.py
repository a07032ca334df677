"""Reference propagator for i hbar dPsi/dt = H Psi using complex arrays.

This is deliberately written without touching ``propagator``: the same
staggered discretization is expressed through complex arithmetic, with
Re Psi held on whole steps and Im Psi on half steps. Each half update applies
the complex generator -i dt/hbar H to one part of the field. It exists to
check the real two-component integrator, so it favours plain numpy over speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import ComplexField, Grid1D, Potential, UnitSystem
from .errors import NonFinite, UnstableTimestep


@dataclass(frozen=True)
class ComplexTrajectory:
    sample_times: np.ndarray
    samples: np.ndarray  # complex, shape (n_samples, n_points)
    grid: Grid1D = field(repr=False)
    recorded_every: int = 1

    def __len__(self):
        return self.sample_times.size

    def field(self, i: int) -> ComplexField:
        return ComplexField.from_array(self.samples[i], self.grid)


def _hamiltonian(psi, potential, grid, units):
    dz = grid.spacing
    if grid.periodic:
        lap = (np.roll(psi, -1) - 2.0 * psi + np.roll(psi, 1)) / dz**2
    else:
        lap = np.zeros_like(psi)
        lap[1:-1] = (psi[2:] - 2.0 * psi[1:-1] + psi[:-2]) / dz**2
    out = -(units.hbar**2 / (2.0 * units.mass)) * lap + potential * psi
    if not grid.periodic:
        out[0] = out[-1] = 0.0
    return out


def complex_oracle_propagate(
    c0: ComplexField,
    V: Potential,
    dt: float,
    n_steps: int,
    record_every: int,
    units: UnitSystem,
    *,
    exact_offset: bool = True,
) -> ComplexTrajectory:
    grid = c0.grid
    if n_steps < 1 or record_every < 1:
        raise ValueError("n_steps and record_every must be >= 1")
    potential = V.values if exact_offset else V.values + V.offset
    kinetic_scale = units.hbar**2 / (units.mass * grid.spacing**2)
    limit = units.hbar / (kinetic_scale + np.max(np.abs(potential)))
    if not dt > 0 or dt > 0.9 * limit:
        raise UnstableTimestep(dt, 0.9 * limit)

    gen = -1j * dt / units.hbar  # generator of one full step
    psi = c0.re + 1j * c0.im
    back = psi.imag - (gen * 0.5 * _hamiltonian(psi.real + 0j, potential, grid, units)).imag
    psi = psi + 0.5 * gen * _hamiltonian(psi.real + 0j, potential, grid, units)

    n_samples = n_steps // record_every + 1
    times = np.arange(n_samples) * (record_every * dt)
    out = np.empty((n_samples, grid.n_points), dtype=complex)

    def sample(j, previous_im):
        value = psi.real + 0.5j * (previous_im + psi.imag)
        if exact_offset and V.offset:
            value = value * np.exp(-1j * V.offset * times[j] / units.hbar)
        out[j] = value

    sample(0, back)
    for n in range(1, n_steps + 1):
        psi = psi + gen * _hamiltonian(1j * psi.imag, potential, grid, units)
        previous_im = psi.imag.copy()
        psi = psi + gen * _hamiltonian(psi.real + 0j, potential, grid, units)
        if n % record_every == 0:
            if not np.all(np.isfinite(psi)):
                raise NonFinite(n)
            sample(n // record_every, previous_im)

    return ComplexTrajectory(times, out, grid, record_every)
