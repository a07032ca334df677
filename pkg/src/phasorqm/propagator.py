"""Staggered leapfrog integration of the real two-component Schrodinger pair.

With H the discrete Hamiltonian and a = dt / hbar, the MINUS-sense scheme is

    psi_x(t + dt)      = psi_x(t)        + a H psi_y(t + dt/2)
    psi_y(t + 3 dt/2)  = psi_y(t + dt/2) - a H psi_x(t + dt)

which is ``hbar d(psi_x)/dt = H psi_y``, ``-hbar d(psi_y)/dt = H psi_x``
discretized with psi_x on whole steps and psi_y on half steps. Under
Psi_c = psi_x + i psi_y this is i hbar dPsi_c/dt = H Psi_c. The PLUS sense
swaps both signs; its solutions are the helicity-flipped MINUS solutions.

No complex arithmetic is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numba
import numpy as np

from .core import Grid1D, Potential, UnitSystem, VectorField
from .errors import NonFinite, UnstableTimestep
from .representation import Helicity

#: propagate() refuses steps above this fraction of stability_limit
STABILITY_MARGIN = 0.9


@numba.njit(inline="always", cache=True)
def _half_update(u, v, diag, c1, coef, periodic):
    # u += coef * (H v), H v = diag * v - c1 * (left + right)
    n = u.shape[0]
    for i in range(1, n - 1):
        u[i] += coef * (diag[i] * v[i] - c1 * (v[i - 1] + v[i + 1]))
    if periodic:
        u[0] += coef * (diag[0] * v[0] - c1 * (v[n - 1] + v[1]))
        u[n - 1] += coef * (diag[n - 1] * v[n - 1] - c1 * (v[n - 2] + v[0]))


@numba.njit(cache=True)
def _advance(x, y, y_prev, diag, c1, a, sense, periodic, n_steps):
    """Advance (x, y) in place by n_steps; y_prev gets y one half step back."""
    for k in range(n_steps):
        _half_update(x, y, diag, c1, -sense * a, periodic)
        if k == n_steps - 1:
            y_prev[:] = y
        _half_update(y, x, diag, c1, sense * a, periodic)


@numba.njit(cache=True)
def _first_bad_step(x, y, diag, c1, a, sense, periodic, n_steps):
    # slow replay used only after a block has produced non-finite values
    for k in range(n_steps):
        _half_update(x, y, diag, c1, -sense * a, periodic)
        _half_update(y, x, diag, c1, sense * a, periodic)
        for i in range(x.shape[0]):
            if not (np.isfinite(x[i]) and np.isfinite(y[i])):
                return k
    return -1


def _coefficients(values, grid: Grid1D, units: UnitSystem):
    c1 = units.hbar**2 / (2 * units.mass * grid.spacing**2)
    diag = np.ascontiguousarray(2 * c1 + np.asarray(values, dtype=float))
    return diag, c1


def discrete_hamiltonian(
    f: np.ndarray, V: Potential, grid: Grid1D, units: UnitSystem
) -> np.ndarray:
    """Three-point finite-difference Hamiltonian applied to a real array.

    Dirichlet endpoints are pinned to zero; periodic grids wrap around.
    The uniform offset ``V.offset`` is included.
    """
    f = np.asarray(f, dtype=float)
    V.check(grid)
    if f.shape != (grid.n_points,):
        raise ValueError(f"array length {f.size} does not match grid ({grid.n_points})")
    diag, c1 = _coefficients(V.total(), grid, units)
    if grid.periodic:
        return diag * f - c1 * (np.roll(f, 1) + np.roll(f, -1))
    out = np.zeros_like(f)
    out[1:-1] = diag[1:-1] * f[1:-1] - c1 * (f[:-2] + f[2:])
    return out


def stability_limit(V: Potential, grid: Grid1D, units: UnitSystem) -> float:
    """hbar / (hbar^2 / (m dz^2) + max|V + offset|)."""
    kinetic = units.hbar**2 / (units.mass * grid.spacing**2)
    return units.hbar / (kinetic + float(np.max(np.abs(V.total()))))


@dataclass(frozen=True)
class StaggeredState:
    """psi_x at time t and psi_y at t + dt/2."""

    psi_x: np.ndarray
    psi_y: np.ndarray
    t: float
    dt: float
    grid: Grid1D = field(repr=False)
    sense: Helicity = Helicity.MINUS

    def __post_init__(self):
        for name in ("psi_x", "psi_y"):
            a = np.array(getattr(self, name), dtype=float)
            if a.shape != (self.grid.n_points,):
                raise ValueError(f"{name} does not match the grid")
            if not np.all(np.isfinite(a)):
                raise ValueError(f"{name} must be finite")
            a.flags.writeable = False
            object.__setattr__(self, name, a)
        if not self.dt > 0:
            raise ValueError("dt must be positive")


def _check_dt(dt, limit):
    if not (np.isfinite(dt) and dt > 0):
        raise UnstableTimestep(dt, limit, f"dt must be positive, got {dt!r}")
    if dt > limit:
        raise UnstableTimestep(dt, limit)


def init_staggered(
    v: VectorField,
    V: Potential,
    dt: float,
    units: UnitSystem,
    sense: Helicity = Helicity.MINUS,
) -> StaggeredState:
    """Lift psi_y to t = dt/2 with a half Euler step."""
    V.check(v.grid)
    _check_dt(dt, stability_limit(V, v.grid, units))
    hx = discrete_hamiltonian(v.psi_x, V, v.grid, units)
    y_half = v.psi_y + sense.sign * (dt / (2 * units.hbar)) * hx
    return StaggeredState(v.psi_x, y_half, 0.0, dt, v.grid, sense)


def step(s: StaggeredState, V: Potential, units: UnitSystem) -> StaggeredState:
    """One leapfrog step over the full Hamiltonian (offset included)."""
    V.check(s.grid)
    diag, c1 = _coefficients(V.total(), s.grid, units)
    x = s.psi_x.copy()
    y = s.psi_y.copy()
    y_prev = np.empty_like(y)
    _advance(x, y, y_prev, diag, c1, s.dt / units.hbar, float(s.sense.sign), s.grid.periodic, 1)
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise NonFinite(int(round(s.t / s.dt)) + 1)
    return StaggeredState(x, y, s.t + s.dt, s.dt, s.grid, s.sense)


def discrete_norm(s: StaggeredState, s_prev_y: np.ndarray) -> float:
    """Leapfrog invariant sum(psi_x(t)^2 + psi_y(t+dt/2) psi_y(t-dt/2)) dz."""
    w = s.grid.weights
    return float(np.sum((s.psi_x**2 + s.psi_y * np.asarray(s_prev_y)) * w))


@dataclass(frozen=True)
class Trajectory:
    """Same-time samples of a propagated field.

    ``psi_y`` holds the average of the two half-step values bracketing each
    sample time. ``discrete_norms`` is the leapfrog invariant at each sample.
    """

    sample_times: np.ndarray
    psi_x: np.ndarray
    psi_y: np.ndarray
    grid: Grid1D = field(repr=False)
    recorded_every: int = 1
    discrete_norms: np.ndarray | None = None

    def __post_init__(self):
        t = np.asarray(self.sample_times, dtype=float)
        if t.ndim != 1 or np.any(np.diff(t) <= 0):
            raise ValueError("sample_times must be strictly increasing")
        shape = (t.size, self.grid.n_points)
        if np.shape(self.psi_x) != shape or np.shape(self.psi_y) != shape:
            raise ValueError(f"sample arrays must have shape {shape}")
        object.__setattr__(self, "sample_times", t)

    @classmethod
    def from_fields(cls, times, fields, recorded_every=1) -> "Trajectory":
        fields = list(fields)
        grid = fields[0].grid
        if any(f.grid != grid for f in fields):
            raise ValueError("all samples must share one grid")
        return cls(
            np.asarray(times, dtype=float),
            np.array([f.psi_x for f in fields]),
            np.array([f.psi_y for f in fields]),
            grid,
            recorded_every,
        )

    def __len__(self):
        return self.sample_times.size

    def field(self, i: int) -> VectorField:
        return VectorField(self.psi_x[i], self.psi_y[i], self.grid)

    @property
    def samples(self) -> list[VectorField]:
        return [self.field(i) for i in range(len(self))]

    @property
    def magnitude(self) -> np.ndarray:
        return np.hypot(self.psi_x, self.psi_y)


def propagate(
    v0: VectorField,
    V: Potential,
    dt: float,
    n_steps: int,
    record_every: int,
    units: UnitSystem,
    *,
    sense: Helicity = Helicity.MINUS,
    exact_offset: bool = True,
) -> Trajectory:
    """Integrate ``v0`` for ``n_steps`` steps, sampling every ``record_every``.

    Samples are taken at step 0, record_every, 2*record_every, ... <= n_steps.

    With ``exact_offset`` (default) the uniform ``V.offset`` is left out of the
    leapfrog and applied afterwards as the exact global rotation by
    offset * t / hbar it generates; the stability check then ignores it. With
    ``exact_offset=False`` it is integrated like any other potential term.
    """
    grid = v0.grid
    V.check(grid)
    if int(n_steps) != n_steps or n_steps < 1:
        raise ValueError(f"n_steps must be a positive integer, got {n_steps!r}")
    if int(record_every) != record_every or record_every < 1:
        raise ValueError(f"record_every must be a positive integer, got {record_every!r}")
    n_steps, record_every = int(n_steps), int(record_every)

    stepped = V.without_offset() if exact_offset else V
    rotation_rate = V.offset / units.hbar if exact_offset else 0.0
    limit = stability_limit(stepped, grid, units)
    _check_dt(dt, STABILITY_MARGIN * limit)

    a = dt / units.hbar
    s = float(sense.sign)
    diag, c1 = _coefficients(stepped.total(), grid, units)
    hx = discrete_hamiltonian(v0.psi_x, stepped, grid, units)
    x = np.array(v0.psi_x, dtype=float)
    y = v0.psi_y + s * (a / 2) * hx
    y_prev = v0.psi_y - s * (a / 2) * hx
    w = grid.weights

    n_samples = n_steps // record_every + 1
    times = np.arange(n_samples) * (record_every * dt)
    xs = np.empty((n_samples, grid.n_points))
    ys = np.empty((n_samples, grid.n_points))
    norms = np.empty(n_samples)

    def record(j):
        y_mid = 0.5 * (y_prev + y)
        norms[j] = np.sum((x * x + y * y_prev) * w)
        if rotation_rate:
            angle = s * rotation_rate * times[j]
            c, sn = np.cos(angle), np.sin(angle)
            xs[j] = c * x - sn * y_mid
            ys[j] = sn * x + c * y_mid
        else:
            xs[j] = x
            ys[j] = y_mid

    record(0)
    for j in range(1, n_samples):
        x0, y0 = x.copy(), y.copy()
        _advance(x, y, y_prev, diag, c1, a, s, grid.periodic, record_every)
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            k = _first_bad_step(x0, y0, diag, c1, a, s, grid.periodic, record_every)
            raise NonFinite((j - 1) * record_every + max(k, 0) + 1)
        record(j)

    return Trajectory(times, xs, ys, grid, record_every, norms)
