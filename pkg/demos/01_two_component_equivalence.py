"""Two real components versus one complex field
=================================================

A wavefunction can be carried as a pair of real arrays (psi_x, psi_y) instead
of one complex array. This walk-through propagates the same Gaussian packet
both ways and shows that the results agree to rounding error.

Run with ``python demos/01_two_component_equivalence.py``.
"""

# %%
# Set up a ring of length 40 and a packet moving to the right.
import numpy as np

from phasorqm import (
    NATURAL,
    Boundary,
    Grid1D,
    Potential,
    complex_from_vector,
    complex_oracle_propagate,
    gaussian_packet,
    helicity_flip,
    propagate,
    stability_limit,
)
from phasorqm.representation import Helicity

grid = Grid1D(40.0, 512, Boundary.PERIODIC)
v0 = gaussian_packet(grid, center=20.0, width=2.0, k=1.5)
V = Potential.zero(grid)
dt = 0.5 * stability_limit(V, grid, NATURAL)
print(f"dz = {grid.spacing:.4f}, dt = {dt:.3e}")

# %%
# Propagate with the real pair integrator and with the complex reference.
vec = propagate(v0, V, dt, 10_000, 100, NATURAL)
ref = complex_oracle_propagate(complex_from_vector(v0), V, dt, 10_000, 100, NATURAL)

diff = max(np.abs(vec.psi_x - ref.samples.real).max(), np.abs(vec.psi_y - ref.samples.imag).max())
print(f"largest difference between the two runs: {diff:.2e}")

# %%
# The staggered scheme conserves a discrete norm exactly, up to rounding.
drift = np.abs(vec.discrete_norms / vec.discrete_norms[0] - 1).max()
print(f"relative drift of the discrete norm: {drift:.2e}")

# %%
# Flipping the sign of psi_y (complex conjugation) and running the integrator
# in the opposite rotation sense reproduces the flipped trajectory exactly.
mirror = propagate(helicity_flip(v0), V, dt, 10_000, 100, NATURAL, sense=Helicity.PLUS)
print("mirrored run equals flipped run:",
      np.array_equal(mirror.psi_x, vec.psi_x) and np.array_equal(mirror.psi_y, -vec.psi_y))

# %%
# The packet centre moves at the group velocity hbar k / m = 1.5.
density = vec.magnitude**2
centre = density @ grid.z / density.sum(axis=1)
print(f"centre at t = 0: {centre[0]:.3f}, at t = {vec.sample_times[-1]:.2f}: {centre[-1]:.3f}")

# %%
# Optional picture of |psi| at a few times.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(7, 3))
    for i in range(0, len(vec), 25):
        ax.plot(grid.z, vec.magnitude[i], label=f"t = {vec.sample_times[i]:.1f}")
    ax.set_xlabel("z")
    ax.set_ylabel("|psi|")
    ax.legend()
    fig.tight_layout()
    fig.savefig("equivalence.png", dpi=120)
    print("wrote equivalence.png")
