"""Closed-form rigid-vortex model of electron spin.

The particle's mass m (and charge e) is split evenly over N close-packed
vortices of radius R, each a solid cylinder spinning at omega. Totals scale
linearly with the packing fraction. No relativistic corrections are applied.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import UnitSystem
from .errors import RimSpeedExceeded

# R * omega may exceed c by this relative amount before we call it a violation;
# at the defaults R * omega == c up to one rounding.
_RIM_SLACK = 1e-12


def compton_radius(units: UnitSystem) -> float:
    return units.hbar / (units.mass * units.c)


def rest_frequency(units: UnitSystem) -> float:
    """m c^2 / hbar, the default vortex rotation rate."""
    return units.mass * units.c**2 / units.hbar


def single_vortex_L(M: float, R: float, omega: float) -> float:
    """Angular momentum (1/2) M R^2 omega of a solid cylinder."""
    return 0.5 * M * R**2 * omega


@dataclass(frozen=True)
class VortexModel:
    units: UnitSystem
    n_vortices: float = 1
    radius: float | None = None
    omega: float | None = None
    packing: float = 1.0

    def __post_init__(self):
        if self.radius is None:
            object.__setattr__(self, "radius", compton_radius(self.units))
        if self.omega is None:
            object.__setattr__(self, "omega", rest_frequency(self.units))
        if not self.n_vortices > 0:
            raise ValueError("n_vortices must be positive")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.omega < 0:
            raise ValueError("omega must be non-negative")
        if not 0 < self.packing <= 1:
            raise ValueError("packing must lie in (0, 1]")

    @property
    def vortex_mass(self) -> float:
        return self.units.mass / self.n_vortices

    @property
    def rim_speed(self) -> float:
        return self.radius * self.omega

    def check_rim_speed(self):
        if self.rim_speed > self.units.c * (1 + _RIM_SLACK):
            raise RimSpeedExceeded(
                f"rim speed R*omega = {self.rim_speed:.6g} exceeds c = {self.units.c:.6g}"
            )


def total_spin(model: VortexModel) -> float:
    model.check_rim_speed()
    L_v = single_vortex_L(model.vortex_mass, model.radius, model.omega)
    return model.packing * model.n_vortices * L_v


@dataclass(frozen=True)
class SpinEnergy:
    """Rotational energy of the vortex array.

    ``direct`` is N * (1/2) I omega^2 with I = (1/2) m_v R^2 (mc^2/4 at the
    defaults). ``stated`` uses N m_v R^2 omega^2 / 2, the expression that gives
    the quoted mc^2/2; the two differ by exactly a factor 2.
    """

    direct: float
    stated: float


def spin_energy(model: VortexModel) -> SpinEnergy:
    model.check_rim_speed()
    N, m_v, R, w = model.n_vortices, model.vortex_mass, model.radius, model.omega
    inertia = 0.5 * m_v * R**2
    direct = model.packing * N * 0.5 * inertia * w**2
    stated = model.packing * N * m_v * R**2 * w**2 / 2
    return SpinEnergy(direct, stated)


def magnetic_moment(model: VortexModel) -> float:
    """N current loops of charge e/N: N * (e/N)(omega / 2 pi) * pi R^2."""
    model.check_rim_speed()
    N = model.n_vortices
    current = (model.units.e / N) * model.omega / (2 * np.pi)
    return model.packing * N * current * np.pi * model.radius**2


@dataclass(frozen=True)
class ScalingReport:
    factor: float
    vortex_mass: float
    single_vortex_L: float
    total_L: float
    n_vortices: float


def scaling_report(model: VortexModel, factor: float) -> ScalingReport:
    """Ratios after scaling R by ``factor`` at fixed areal density and omega.

    Fixed area means N scales as factor**-2 and each vortex's share of the
    mass as factor**2.
    """
    if not factor > 0:
        raise ValueError("factor must be positive")
    scaled = replace(
        model, radius=model.radius * factor, n_vortices=model.n_vortices / factor**2
    )
    scaled.check_rim_speed()
    model.check_rim_speed()

    def L_v(m):
        return single_vortex_L(m.vortex_mass, m.radius, m.omega)

    return ScalingReport(
        factor=factor,
        vortex_mass=scaled.vortex_mass / model.vortex_mass,
        single_vortex_L=L_v(scaled) / L_v(model),
        total_L=total_spin(scaled) / total_spin(model),
        n_vortices=scaled.n_vortices / model.n_vortices,
    )
