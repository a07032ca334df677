"""Real two-component ("vector phasor") Schrodinger simulations.

The complex wavefunction Psi = psi_x + i psi_y is carried as a real pair and
integrated with a staggered leapfrog scheme. Spectra of the resulting
trajectories are checked against a complex-arithmetic reference, and a
closed-form vortex model of spin sits alongside.
"""

from .core import (
    NATURAL,
    SI_ELECTRON,
    Boundary,
    ComplexField,
    Grid1D,
    Potential,
    UnitSystem,
    VectorField,
    norm_squared,
    normalize,
)
from .errors import (
    BadQuantumNumber,
    IncommensurateWave,
    NonFinite,
    NonUniformSampling,
    ParseError,
    PhasorError,
    RimSpeedExceeded,
    TooFewSamples,
    UnstableTimestep,
    ValidationError,
    ZeroNorm,
)
from .oracle import ComplexTrajectory, complex_oracle_propagate
from .propagator import (
    StaggeredState,
    Trajectory,
    discrete_hamiltonian,
    discrete_norm,
    init_staggered,
    propagate,
    stability_limit,
    step,
)
from .representation import (
    Helicity,
    WaveParams,
    box_energy,
    box_energy_discrete,
    box_state,
    complex_from_vector,
    de_broglie,
    gaussian_packet,
    helicity_flip,
    plane_wave,
    rest_mass_offset,
    vector_from_complex,
)
from .spectral import Correlation, Peak, SpectrumResult, autocorrelation, planck_check, spectrum
from .vortex import (
    ScalingReport,
    SpinEnergy,
    VortexModel,
    compton_radius,
    magnetic_moment,
    scaling_report,
    single_vortex_L,
    spin_energy,
    total_spin,
)

__version__ = "0.1.0"
