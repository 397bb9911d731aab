"""Self-verifying numerics for the Casimir effect between two perfectly
conducting parallel plates separated by a homogeneous isotropic medium:
free energy, internal energy, and electromagnetic energy at arbitrary
temperature, weakly dispersive (nondissipative) media, and arbitrary
spacetime dimension, each closed form paired with an independent
numerical route.

Natural units hbar = c = k_B = 1 throughout; energies are per unit plate
area.
"""

from .engine import Tolerance, NumericResult, adaptive_quad, sum_series, find_root, finite_diff
from .specfun import DimensionD, gamma_fn, riemann_zeta, hurwitz_zeta, solid_angle
from .matsubara import (
    CavityConfig,
    EnergyValue,
    free_energy,
    free_energy_T0,
    free_energy_lowT,
    internal_energy,
    internal_energy_direct,
    internal_energy_resummed,
    internal_energy_from_F,
    internal_energy_lowT,
    internal_energy_highT_asymptote,
    pressure,
)
from .green_em import (
    SpectralGreens,
    EnergySpectralPoint,
    greens_components,
    spectral_energy_density,
    em_energy_T0,
    em_energy_T0_polar,
    em_energy_finiteT,
)
from .dispersion import (
    LorentzModel,
    CutoffSpec,
    W2CutoffResult,
    eps_of_omega,
    eps_imag_axis,
    dispersive_mode_solve,
    w_I_energy,
    w2_density_cutoff,
)
from .circuit import CircuitSpec, CircuitEnergy, eigenfrequency, circuit_energy, adiabatic_variation_check
from .hyperdim import (
    HyperConfig,
    DensityProfile,
    CutoffEnergyResult,
    pressure_quadrature,
    pressure_closed,
    density_profile,
    pressure_from_w1,
    cutoff_mode_energy,
    dispersive_hyper_energy,
)

__version__ = "0.1.0"
