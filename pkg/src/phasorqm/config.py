"""Line-based ``key = value`` run configuration.

Blank lines are ignored and ``#`` starts a comment. Every key may appear at
most once. Recognised keys::

    command        propagate | eigen | spectrum | vortex | verify   (required)
    unit_system    natural | si-electron                  [natural]
    length         box / ring length                      (grid commands)
    n_points       number of grid points                  (grid commands)
    boundary       dirichlet | periodic                   [dirichlet]
    initial_state  box | superposition | plane_wave | gaussian        [box]
    n              box quantum number                     [1]
    weights        comma list, amplitude of n = 1, 2, ... (superposition)
    helicity       plus | minus                           [minus]
    wavenumber     plane-wave k or packet mean k          [0]
    amplitude      plane-wave amplitude                   [1]
    center, width  Gaussian packet centre and rms width   [length/2, length/20]
    potential      zero | constant | file                 [zero]
    offset         uniform potential offset               [0]
    potential_file one value per line, one line per grid point (potential = file)
    sense          minus | plus, rotation sense of the integrator     [minus]
    exact_offset   true | false                           [true]
    dt, n_steps    time step and number of steps          (propagate, spectrum)
    record_every   sampling stride in steps               [1]
    n_max          highest level tabulated by eigen       [5]
    n_vortices, radius, omega, packing   vortex model     [1, hbar/mc, mc^2/hbar, 1]
    scale_factor   optional R scaling for the vortex report
    output         output directory                       [.]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import UNIT_SYSTEMS, Boundary
from .errors import ParseError, ValidationError
from .representation import Helicity
from .vortex import compton_radius, rest_frequency

COMMANDS = ("propagate", "eigen", "spectrum", "vortex", "verify")
GRID_COMMANDS = ("propagate", "eigen", "spectrum")
STEP_COMMANDS = ("propagate", "spectrum")
INITIAL_STATES = ("box", "superposition", "plane_wave", "gaussian")
POTENTIALS = ("zero", "constant", "file")

KNOWN_KEYS = {
    "command", "unit_system", "length", "n_points", "boundary", "initial_state",
    "n", "weights", "helicity", "wavenumber", "amplitude", "center", "width",
    "potential", "offset", "potential_file", "sense", "exact_offset", "dt",
    "n_steps", "record_every", "n_max", "n_vortices", "radius", "omega",
    "packing", "scale_factor", "output",
}


@dataclass
class RunConfig:
    command: str
    unit_system: str = "natural"
    length: float | None = None
    n_points: int | None = None
    boundary: Boundary = Boundary.DIRICHLET
    initial_state: str = "box"
    n: int = 1
    weights: list[float] = field(default_factory=list)
    helicity: Helicity = Helicity.MINUS
    wavenumber: float = 0.0
    amplitude: float = 1.0
    center: float | None = None
    width: float | None = None
    potential: str = "zero"
    offset: float = 0.0
    potential_file: Path | None = None
    potential_values: np.ndarray | None = None
    sense: Helicity = Helicity.MINUS
    exact_offset: bool = True
    dt: float | None = None
    n_steps: int | None = None
    record_every: int = 1
    n_max: int = 5
    n_vortices: float = 1.0
    radius: float | None = None
    omega: float | None = None
    packing: float = 1.0
    scale_factor: float | None = None
    output: Path = Path(".")

    @property
    def units(self):
        return UNIT_SYSTEMS[self.unit_system]


def _split(text: str) -> dict[str, tuple[int, str]]:
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(lineno, f"expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ParseError(lineno, "missing key")
        if key in entries:
            raise ParseError(lineno, f"duplicate key {key!r}")
        entries[key] = (lineno, value)
    return entries


def _number(key, value, kind=float):
    try:
        x = float(value)
    except ValueError:
        raise ValidationError(key, f"expected a number, got {value!r}") from None
    if not np.isfinite(x):
        raise ValidationError(key, "must be finite")
    if kind is int:
        if x != int(x):
            raise ValidationError(key, f"expected an integer, got {value!r}")
        return int(x)
    return x


def _choice(key, value, options):
    v = value.strip().lower()
    if v not in options:
        raise ValidationError(key, f"must be one of {', '.join(options)}; got {value!r}")
    return v


def _positive(key, x):
    if not x > 0:
        raise ValidationError(key, f"must be positive, got {x!r}")
    return x


def parse_config(text: str, base_dir: str | Path | None = None) -> RunConfig:
    """Parse and validate a configuration; file paths resolve against base_dir."""
    entries = _split(text)
    for key, (lineno, _) in entries.items():
        if key not in KNOWN_KEYS:
            raise ValidationError(key, f"unknown key (line {lineno})")
    raw = {k: v for k, (_, v) in entries.items()}
    base = Path(base_dir) if base_dir is not None else Path(".")

    if "command" not in raw:
        raise ValidationError("command", "missing")
    cfg = RunConfig(command=_choice("command", raw["command"], COMMANDS))
    cfg.unit_system = _choice("unit_system", raw.get("unit_system", "natural"), tuple(UNIT_SYSTEMS))

    if "output" in raw:
        cfg.output = Path(raw["output"])
    for key in ("length", "wavenumber", "amplitude", "center", "width", "offset",
                "dt", "radius", "omega", "packing", "scale_factor", "n_vortices"):
        if key in raw:
            setattr(cfg, key, _number(key, raw[key]))
    for key in ("n_points", "n", "n_steps", "record_every", "n_max"):
        if key in raw:
            setattr(cfg, key, _number(key, raw[key], int))
    if "boundary" in raw:
        cfg.boundary = Boundary(_choice("boundary", raw["boundary"], ("dirichlet", "periodic")))
    if "initial_state" in raw:
        cfg.initial_state = _choice("initial_state", raw["initial_state"], INITIAL_STATES)
    if "potential" in raw:
        cfg.potential = _choice("potential", raw["potential"], POTENTIALS)
    for key in ("helicity", "sense"):
        if key in raw:
            setattr(cfg, key, Helicity.parse(_choice(key, raw[key], ("plus", "minus"))))
    if "exact_offset" in raw:
        cfg.exact_offset = _choice("exact_offset", raw["exact_offset"], ("true", "false")) == "true"
    if "weights" in raw:
        try:
            cfg.weights = [float(w) for w in raw["weights"].split(",")]
        except ValueError:
            raise ValidationError("weights", f"expected comma-separated numbers, got {raw['weights']!r}") from None
        if not cfg.weights or not np.all(np.isfinite(cfg.weights)):
            raise ValidationError("weights", "must be finite numbers")

    _validate(cfg, raw, base)
    return cfg


def _validate(cfg: RunConfig, raw: dict, base: Path):
    if cfg.command in GRID_COMMANDS:
        for key in ("length", "n_points"):
            if getattr(cfg, key) is None:
                raise ValidationError(key, f"required for command {cfg.command}")
        _positive("length", cfg.length)
        if cfg.n_points < 3:
            raise ValidationError("n_points", "must be at least 3")
    if cfg.command == "eigen":
        if cfg.boundary is not Boundary.DIRICHLET:
            raise ValidationError("boundary", "eigen tabulates box levels; use dirichlet")
        if not 1 <= cfg.n_max < cfg.n_points - 1:
            raise ValidationError("n_max", f"must lie in [1, {cfg.n_points - 2}]")

    if cfg.command in STEP_COMMANDS:
        for key in ("dt", "n_steps"):
            if getattr(cfg, key) is None:
                raise ValidationError(key, f"required for command {cfg.command}")
        _positive("dt", cfg.dt)
        _positive("n_steps", cfg.n_steps)
        _positive("record_every", cfg.record_every)
        if cfg.record_every > cfg.n_steps:
            raise ValidationError("record_every", "must not exceed n_steps")

        state = cfg.initial_state
        if state in ("box", "superposition") and cfg.boundary is not Boundary.DIRICHLET:
            raise ValidationError("boundary", f"initial_state {state} needs a dirichlet grid")
        if state == "plane_wave" and cfg.boundary is not Boundary.PERIODIC:
            raise ValidationError("boundary", "initial_state plane_wave needs a periodic grid")
        if state == "box" and not 1 <= cfg.n < cfg.n_points - 1:
            raise ValidationError("n", f"must lie in [1, {cfg.n_points - 2}]")
        if state == "superposition":
            if not cfg.weights:
                raise ValidationError("weights", "required for initial_state superposition")
            if len(cfg.weights) >= cfg.n_points - 1:
                raise ValidationError("weights", "more levels than the grid resolves")
            if not any(cfg.weights):
                raise ValidationError("weights", "at least one weight must be non-zero")
        if state == "gaussian":
            if cfg.center is None:
                cfg.center = cfg.length / 2
            if cfg.width is None:
                cfg.width = cfg.length / 20
            _positive("width", cfg.width)
        if state == "plane_wave":
            if cfg.amplitude < 0:
                raise ValidationError("amplitude", "must be >= 0")

        if cfg.potential == "file":
            if "potential_file" not in raw:
                raise ValidationError("potential_file", "required when potential = file")
            path = Path(raw["potential_file"])
            if not path.is_absolute():
                path = base / path
            if not path.is_file():
                raise ValidationError("potential_file", f"no such file: {path}")
            try:
                values = np.loadtxt(path, dtype=float, ndmin=1, comments="#")
            except ValueError as exc:
                raise ValidationError("potential_file", f"unreadable: {exc}") from None
            if values.ndim != 1 or values.size != cfg.n_points:
                raise ValidationError(
                    "potential_file", f"expected {cfg.n_points} values, found {values.size}"
                )
            if not np.all(np.isfinite(values)):
                raise ValidationError("potential_file", "values must be finite")
            cfg.potential_file = path
            cfg.potential_values = values
        elif cfg.potential == "zero" and cfg.offset != 0:
            raise ValidationError("offset", "potential = zero does not take an offset; use constant")

    if cfg.command == "vortex":
        units = cfg.units
        if cfg.radius is None:
            cfg.radius = compton_radius(units)
        if cfg.omega is None:
            cfg.omega = rest_frequency(units)
        _positive("n_vortices", cfg.n_vortices)
        _positive("radius", cfg.radius)
        if cfg.omega < 0:
            raise ValidationError("omega", "must be non-negative")
        if not 0 < cfg.packing <= 1:
            raise ValidationError("packing", "must lie in (0, 1]")
        if cfg.scale_factor is not None:
            _positive("scale_factor", cfg.scale_factor)
