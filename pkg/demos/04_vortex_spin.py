"""Spin and magnetic moment of a rigid vortex array
===================================================

Split the electron's mass and charge over N spinning cylinders of radius
hbar/mc turning at mc^2/hbar. The total angular momentum is hbar/2 for every N,
and the magnetic moment is the Bohr magneton.

Run with ``python demos/04_vortex_spin.py``.
"""

# %%
from phasorqm import (
    NATURAL,
    SI_ELECTRON,
    VortexModel,
    compton_radius,
    magnetic_moment,
    scaling_report,
    spin_energy,
    total_spin,
)

print(f"Compton radius: {compton_radius(SI_ELECTRON):.5e} m")
for N in (1, 7, 100, 10**6):
    m = VortexModel(SI_ELECTRON, n_vortices=N)
    print(f"N = {N:>7}:  L / hbar = {total_spin(m) / SI_ELECTRON.hbar:.12f}"
          f"  mu = {magnetic_moment(m):.5e} J/T")

# %%
# The rotational energy: the direct sum N * I omega^2 / 2 gives mc^2/4, while
# the commonly quoted figure is mc^2/2. Both are reported.
e = spin_energy(VortexModel(NATURAL))
print(f"spin energy / mc^2: direct {e.direct}, quoted {e.stated}")

# %%
# Doubling the radius while keeping the area density fixed: a quarter as many
# vortices, each four times heavier with sixteen times the angular momentum.
# Start from R = r_c / 2 so the doubled rim speed stays at c.
rep = scaling_report(VortexModel(NATURAL, radius=0.5), 2.0)
print(f"mass x{rep.vortex_mass}, L_v x{rep.single_vortex_L}, "
      f"L_total x{rep.total_L}, N x{rep.n_vortices}")
