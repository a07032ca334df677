"""Energies of a particle in a box from its autocorrelation
============================================================

An equal mix of the three lowest box states is propagated, its overlap with
the starting state is recorded, and the Fourier transform of that overlap
shows one peak per level at omega_n = n^2 / 2 (natural units, L = pi).

Run with ``python demos/02_box_spectrum.py``.
"""

# %%
import numpy as np

from phasorqm import (
    NATURAL,
    Grid1D,
    Potential,
    autocorrelation,
    box_energy,
    box_state,
    normalize,
    planck_check,
    propagate,
    spectrum,
    stability_limit,
)
from phasorqm.representation import Helicity

grid = Grid1D(np.pi, 201)
levels = [box_state(n, Helicity.MINUS, grid, 0.0, NATURAL) for n in (1, 2, 3)]
v0 = normalize(levels[0] + levels[1] + levels[2])
V = Potential.zero(grid)

# %%
# A frequency resolution of 0.01 needs a record about 630 time units long.
dt = 0.85 * stability_limit(V, grid, NATURAL)
every = 500
n_samples = int(np.ceil(2 * np.pi / (0.01 * every * dt)))
traj = propagate(v0, V, dt, (n_samples - 1) * every, every, NATURAL)
print(f"{traj.recorded_every * (len(traj) - 1)} steps, {len(traj)} samples")

# %%
corr = autocorrelation(traj)
result = spectrum(corr)
for p in result.peaks:
    print(f"peak at omega = {p.omega:.5f}  amplitude = {p.amplitude:.3f}")
print(f"bin width {result.bin_width:.5f}")

# %%
# Compare with E_n = hbar^2 (n pi / L)^2 / 2m through E = hbar omega.
expected = [box_energy(n, np.pi, NATURAL) for n in (1, 2, 3)]
for row in planck_check(result, expected, NATURAL):
    print(f"E = {row.energy:.3f}: found {row.peak_energy:.5f}, relative error {row.relative_error:.1e}")

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(7, 3))
    ax.semilogy(result.omegas, result.magnitudes)
    for e in expected:
        ax.axvline(e, color="grey", lw=0.5)
    ax.set_xlim(-1, 6)
    ax.set_xlabel("omega")
    ax.set_ylabel("|C(omega)|")
    fig.tight_layout()
    fig.savefig("box_spectrum.png", dpi=120)
    print("wrote box_spectrum.png")
