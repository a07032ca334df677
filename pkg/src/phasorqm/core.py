"""Units, grids, potentials and the two wavefunction containers.

Everything here is an immutable value: arrays handed to the constructors are
copied and marked read-only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy import constants as _codata

from .errors import ZeroNorm


@dataclass(frozen=True)
class UnitSystem:
    """Values of hbar, particle mass, speed of light and unit charge."""

    hbar: float
    mass: float
    c: float
    e: float
    name: str = "custom"

    def __post_init__(self):
        for key in ("hbar", "mass", "c", "e"):
            value = getattr(self, key)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{key} must be finite and positive, got {value!r}")


NATURAL = UnitSystem(hbar=1.0, mass=1.0, c=1.0, e=1.0, name="natural")
SI_ELECTRON = UnitSystem(
    hbar=_codata.hbar,
    mass=_codata.m_e,
    c=_codata.c,
    e=_codata.e,
    name="si-electron",
)

UNIT_SYSTEMS = {"natural": NATURAL, "si-electron": SI_ELECTRON}


class Boundary(enum.Enum):
    DIRICHLET = "dirichlet"
    PERIODIC = "periodic"


def _frozen(arr, name):
    a = np.array(arr, dtype=float, copy=True)
    if a.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid on [0, length].

    Dirichlet grids store both endpoints (where the field vanishes); periodic
    grids drop the duplicate point at z = length.
    """

    length: float
    n_points: int
    boundary: Boundary = Boundary.DIRICHLET

    def __post_init__(self):
        object.__setattr__(self, "boundary", Boundary(self.boundary))
        if int(self.n_points) != self.n_points or self.n_points < 3:
            raise ValueError(f"n_points must be an integer >= 3, got {self.n_points!r}")
        object.__setattr__(self, "n_points", int(self.n_points))
        if not (np.isfinite(self.length) and self.length > 0):
            raise ValueError(f"length must be positive, got {self.length!r}")

    @property
    def periodic(self) -> bool:
        return self.boundary is Boundary.PERIODIC

    @property
    def spacing(self) -> float:
        if self.periodic:
            return self.length / self.n_points
        return self.length / (self.n_points - 1)

    @property
    def z(self) -> np.ndarray:
        if self.periodic:
            return np.arange(self.n_points) * self.spacing
        return np.linspace(0.0, self.length, self.n_points)

    @property
    def weights(self) -> np.ndarray:
        """Quadrature weights: trapezoid for Dirichlet, flat for periodic."""
        w = np.full(self.n_points, self.spacing)
        if not self.periodic:
            w[0] = w[-1] = 0.5 * self.spacing
        return w


@dataclass(frozen=True)
class Potential:
    """Real potential energy per grid point plus a uniform offset."""

    values: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        v = _frozen(self.values, "values")
        if not np.all(np.isfinite(v)):
            raise ValueError("potential values must be finite")
        if not np.isfinite(self.offset):
            raise ValueError("potential offset must be finite")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def zero(cls, grid: Grid1D, offset: float = 0.0) -> "Potential":
        return cls(np.zeros(grid.n_points), offset)

    def total(self) -> np.ndarray:
        return self.values + self.offset

    def without_offset(self) -> "Potential":
        return Potential(self.values, 0.0)

    def check(self, grid: Grid1D):
        if self.values.shape != (grid.n_points,):
            raise ValueError(
                f"potential has {self.values.size} values, grid has {grid.n_points} points"
            )


def _check_pair(a, b, grid, names):
    if a.shape != (grid.n_points,) or b.shape != (grid.n_points,):
        raise ValueError(f"{names} must both have length {grid.n_points}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError(f"{names} must be finite")
    if not grid.periodic:
        if a[0] != 0 or a[-1] != 0 or b[0] != 0 or b[-1] != 0:
            raise ValueError("Dirichlet fields must vanish at both endpoints")


@dataclass(frozen=True)
class VectorField:
    """The real transverse pair (psi_x, psi_y) sampled on a grid."""

    psi_x: np.ndarray
    psi_y: np.ndarray
    grid: Grid1D = field(repr=False)

    def __post_init__(self):
        x = _frozen(self.psi_x, "psi_x")
        y = _frozen(self.psi_y, "psi_y")
        _check_pair(x, y, self.grid, "psi_x/psi_y")
        object.__setattr__(self, "psi_x", x)
        object.__setattr__(self, "psi_y", y)

    @property
    def magnitude(self) -> np.ndarray:
        return np.hypot(self.psi_x, self.psi_y)

    def scaled(self, factor: float) -> "VectorField":
        return VectorField(self.psi_x * factor, self.psi_y * factor, self.grid)

    def rotated(self, angle: float) -> "VectorField":
        """Rotate every (psi_x, psi_y) pair counter-clockwise by ``angle``."""
        c, s = np.cos(angle), np.sin(angle)
        return VectorField(
            c * self.psi_x - s * self.psi_y, s * self.psi_x + c * self.psi_y, self.grid
        )

    def __add__(self, other: "VectorField") -> "VectorField":
        if other.grid != self.grid:
            raise ValueError("fields live on different grids")
        return VectorField(self.psi_x + other.psi_x, self.psi_y + other.psi_y, self.grid)


@dataclass(frozen=True)
class ComplexField:
    """Real and imaginary parts of a scalar complex wavefunction."""

    re: np.ndarray
    im: np.ndarray
    grid: Grid1D = field(repr=False)

    def __post_init__(self):
        re = _frozen(self.re, "re")
        im = _frozen(self.im, "im")
        _check_pair(re, im, self.grid, "re/im")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def from_array(cls, values: np.ndarray, grid: Grid1D) -> "ComplexField":
        values = np.asarray(values, dtype=complex)
        return cls(values.real, values.imag, grid)

    def to_array(self) -> np.ndarray:
        return self.re + 1j * self.im

    def conj(self) -> "ComplexField":
        return ComplexField(self.re, -self.im, self.grid)


def norm_squared(f: VectorField) -> float:
    """Integrated intensity sum((psi_x**2 + psi_y**2) * w) with grid quadrature."""
    return float(np.sum((f.psi_x**2 + f.psi_y**2) * f.grid.weights))


def normalize(f: VectorField) -> VectorField:
    n2 = norm_squared(f)
    if n2 == 0.0:
        raise ZeroNorm("cannot normalize a field with zero norm")
    return f.scaled(1.0 / np.sqrt(n2))
