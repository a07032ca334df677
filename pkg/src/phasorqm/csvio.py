"""Plot-ready CSV tables with lossless, deterministic number formatting."""

from __future__ import annotations

import csv
import io
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .propagator import Trajectory
from .spectral import Correlation, SpectrumResult


@dataclass
class CsvTable:
    header: list[str]
    rows: list[list] = field(default_factory=list)

    def render(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError("ragged CSV row")
            writer.writerow([format_value(v) for v in row])
        return buf.getvalue()


def format_value(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if not np.isfinite(value):
        raise ValueError(f"non-finite value {value!r} in CSV output")
    return "%.17g" % value


def write_table(table: CsvTable, path) -> Path:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    text = table.render()
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def read_table(path) -> CsvTable:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return CsvTable(header, [row for row in reader])


def emit_trajectory_csv(traj: Trajectory) -> CsvTable:
    table = CsvTable(["t", "z", "psi_x", "psi_y", "magnitude"])
    z = traj.grid.z
    mag = traj.magnitude
    for i, t in enumerate(traj.sample_times):
        for j in range(z.size):
            table.rows.append([t, z[j], traj.psi_x[i, j], traj.psi_y[i, j], mag[i, j]])
    return table


def emit_spectrum_csv(result: SpectrumResult) -> CsvTable:
    table = CsvTable(["omega", "amplitude", "bin_width"])
    for p in result.peaks:
        table.rows.append([p.omega, p.amplitude, p.bin_width])
    return table


def emit_correlation_csv(corr: Correlation) -> CsvTable:
    table = CsvTable(["t", "c_re", "c_im"])
    for row in zip(corr.times, corr.c_re, corr.c_im):
        table.rows.append(list(row))
    return table
