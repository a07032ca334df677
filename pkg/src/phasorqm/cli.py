"""Command-line front end.

    phasorqm <command> --config <path> [--output <dir>]

Exit codes: 0 success, 1 invalid configuration, 2 numerical failure
(unstable step or non-finite field), 3 a verification criterion failed.
Errors are reported as one ``key=value`` line on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import csvio, verify
from .config import COMMANDS, RunConfig, parse_config
from .core import Grid1D, Potential, normalize
from .errors import (
    BadQuantumNumber,
    IncommensurateWave,
    NonFinite,
    ParseError,
    PhasorError,
    UnstableTimestep,
    ValidationError,
    ZeroNorm,
)
from .propagator import propagate
from .representation import (
    WaveParams,
    box_energy,
    box_energy_discrete,
    box_state,
    gaussian_packet,
    plane_wave,
)
from .spectral import autocorrelation, spectrum
from .vortex import (
    VortexModel,
    compton_radius,
    magnetic_moment,
    scaling_report,
    spin_energy,
    total_spin,
)

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL, EXIT_VERIFY_FAILED = 0, 1, 2, 3


def _grid(cfg: RunConfig) -> Grid1D:
    return Grid1D(cfg.length, cfg.n_points, cfg.boundary)


def initial_field(cfg: RunConfig, grid: Grid1D):
    units = cfg.units
    if cfg.initial_state == "box":
        return box_state(cfg.n, cfg.helicity, grid, 0.0, units)
    if cfg.initial_state == "superposition":
        field = None
        for n, weight in enumerate(cfg.weights, start=1):
            term = box_state(n, cfg.helicity, grid, 0.0, units).scaled(weight)
            field = term if field is None else field + term
        return normalize(field)
    if cfg.initial_state == "plane_wave":
        omega = units.hbar * cfg.wavenumber**2 / (2 * units.mass)
        return plane_wave(WaveParams(cfg.amplitude, cfg.wavenumber, omega, cfg.helicity), grid)
    return gaussian_packet(grid, cfg.center, cfg.width, cfg.wavenumber, cfg.helicity)


def potential_for(cfg: RunConfig, grid: Grid1D) -> Potential:
    if cfg.potential == "file":
        return Potential(cfg.potential_values, cfg.offset)
    return Potential.zero(grid, cfg.offset if cfg.potential == "constant" else 0.0)


def _trajectory(cfg: RunConfig):
    grid = _grid(cfg)
    v0 = initial_field(cfg, grid)
    V = potential_for(cfg, grid)
    return propagate(
        v0, V, cfg.dt, cfg.n_steps, cfg.record_every, cfg.units,
        sense=cfg.sense, exact_offset=cfg.exact_offset,
    )


def _vortex_table(cfg: RunConfig) -> csvio.CsvTable:
    model = VortexModel(cfg.units, cfg.n_vortices, cfg.radius, cfg.omega, cfg.packing)
    energy = spin_energy(model)
    table = csvio.CsvTable(["quantity", "value"])
    table.rows += [
        ["total_spin", total_spin(model)],
        ["magnetic_moment", magnetic_moment(model)],
        ["spin_energy_direct", energy.direct],
        ["spin_energy_paper", energy.stated],
        ["compton_radius", compton_radius(cfg.units)],
    ]
    if cfg.scale_factor is not None:
        rep = scaling_report(model, cfg.scale_factor)
        table.rows += [
            ["scaling_vortex_mass", rep.vortex_mass],
            ["scaling_single_vortex_L", rep.single_vortex_L],
            ["scaling_total_L", rep.total_L],
            ["scaling_n_vortices", rep.n_vortices],
        ]
    return table


def _eigen_table(cfg: RunConfig) -> csvio.CsvTable:
    grid = _grid(cfg)
    units = cfg.units
    table = csvio.CsvTable(["n", "energy", "energy_discrete", "omega"])
    for n in range(1, cfg.n_max + 1):
        energy = box_energy(n, grid.length, units)
        table.rows.append([n, energy, box_energy_discrete(n, grid, units), energy / units.hbar])
    return table


def execute(cfg: RunConfig, output: Path, out=sys.stdout) -> int:
    """Run a validated configuration, writing CSV files into ``output``."""
    if cfg.command == "vortex":
        csvio.write_table(_vortex_table(cfg), output / "vortex.csv")
    elif cfg.command == "eigen":
        csvio.write_table(_eigen_table(cfg), output / "eigen.csv")
    elif cfg.command == "propagate":
        traj = _trajectory(cfg)
        csvio.write_table(csvio.emit_trajectory_csv(traj), output / "trajectory.csv")
    elif cfg.command == "spectrum":
        traj = _trajectory(cfg)
        corr = autocorrelation(traj)
        result = spectrum(corr)
        # build both tables first so a failure leaves no partial output
        tables = [
            (csvio.emit_correlation_csv(corr), "correlation.csv"),
            (csvio.emit_spectrum_csv(result), "spectrum.csv"),
        ]
        for table, name in tables:
            csvio.write_table(table, output / name)
    elif cfg.command == "verify":
        results = verify.run_verification()
        for r in results:
            print(r.line(), file=out)
        csvio.write_table(verify.render(results), output / "verify.csv")
        if not all(r.passed for r in results):
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def _report(err, kind, **extra):
    fields = " ".join(f"{k}={v}" for k, v in extra.items())
    message = str(err).replace("\n", " ").replace('"', "'")
    line = f"phasorqm: error={kind} {fields} message=\"{message}\"".replace("  ", " ")
    print(line, file=sys.stderr)


def run(cfg_text: str, command: str | None = None, output: str | Path | None = None,
        base_dir: str | Path | None = None, out=sys.stdout) -> int:
    try:
        cfg = parse_config(cfg_text, base_dir)
        if command is not None and command != cfg.command:
            raise ValidationError(
                "command", f"config says {cfg.command!r} but {command!r} was requested"
            )
        target = Path(output) if output is not None else cfg.output
        return execute(cfg, target, out)
    except ParseError as err:
        _report(err, "ParseError", line=err.line_number)
        return EXIT_INVALID
    except ValidationError as err:
        _report(err, "ValidationError", field=err.field)
        return EXIT_INVALID
    except (BadQuantumNumber, IncommensurateWave, ZeroNorm) as err:
        _report(err, type(err).__name__)
        return EXIT_INVALID
    except UnstableTimestep as err:
        _report(err, "UnstableTimestep", dt="%.17g" % err.dt, stability_limit="%.17g" % err.limit)
        return EXIT_NUMERICAL
    except NonFinite as err:
        _report(err, "NonFinite", step=err.step_index)
        return EXIT_NUMERICAL
    except OSError as err:
        _report(err, "IoError")
        return EXIT_INVALID
    except (PhasorError, ValueError) as err:
        _report(err, type(err).__name__)
        return EXIT_INVALID


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="phasorqm",
        description="Real two-component Schrodinger simulations and the vortex spin model.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", type=Path, help="key = value run file (optional for verify)")
    parser.add_argument("--output", type=Path, help="directory for CSV output")
    args = parser.parse_args(argv)

    if args.config is None:
        if args.command != "verify":
            parser.error("--config is required for this command")
        text, base = "command = verify\n", None
    else:
        try:
            text = args.config.read_text()
        except OSError as err:
            _report(err, "IoError")
            return EXIT_INVALID
        base = args.config.parent
    return run(text, args.command, args.output, base)


if __name__ == "__main__":
    sys.exit(main())
