"""milnezeta: critical-line zeta zero densities and the Milne amplitude toolbox.

The pipeline connects three views of the same spectral problem:

* closed-form zero densities built on the complex digamma function
  (:mod:`milnezeta.zero_density`, :mod:`milnezeta.specfun`);
* the transformed repulsive-Coulomb wave equation, its asymptotic
  sine/cosine pair and the Milne amplitude 1/rho**2 with an independent
  Pinney-equation integrator (:mod:`milnezeta.coulomb_wave`,
  :mod:`milnezeta.milne`);
* the canonical flow in the coordinate y with its Ermakov-Lewis invariant
  (:mod:`milnezeta.dynamics`), and empirical zeta zeros for ground truth
  (:mod:`milnezeta.zeros_oracle`).

Hot kernels run on a compiled Cython core when available, with a pure
Python fallback selected at import (:mod:`milnezeta.backend`).
"""

from .backend import active_backend, available_backends
from .coulomb_wave import (
    Branch,
    CoulombParams,
    WaveSample,
    asymptotic_pair,
    asymptotic_samples,
    effective_potential,
    integrate_schrodinger,
    phase_argument,
    phase_rate,
    wronskian,
)
from .dynamics import (
    PhaseState,
    ermakov_lewis_invariant,
    hamiltonian_flow,
    integrate_coupled,
    oscillator_energy,
)
from .errors import (
    AbscissaMismatchError,
    AmplitudeCollapseError,
    DegenerateAlphaError,
    DomainError,
    MilnezetaError,
    PoleError,
    RangeError,
    ToleranceError,
    ZeroTableError,
)
from .milne import (
    GridSpec,
    MilneGrid,
    MilneSample,
    SuperpositionConstants,
    integrate_pinney,
    milne_amplitude,
    milne_density,
    milne_grid,
    superposition_constants,
)
from .specfun import arg_gamma, digamma, log_gamma
from .zero_density import (
    GAP_CONSTANT,
    DensityCurve,
    DensityKind,
    coulomb_density,
    coulomb_phase_derivative,
    coulomb_phase_function,
    density_curve,
    density_gap,
    riemann_zero_density,
    smooth_zero_count,
)
from .zeros_oracle import (
    ZeroTable,
    empirical_density,
    load_zero_table,
    riemann_siegel_theta,
    scan_zeros,
    z_function,
    zeta_half_line,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "available_backends",
    "arg_gamma",
    "digamma",
    "log_gamma",
    "Branch",
    "CoulombParams",
    "WaveSample",
    "asymptotic_pair",
    "asymptotic_samples",
    "effective_potential",
    "integrate_schrodinger",
    "phase_argument",
    "phase_rate",
    "wronskian",
    "PhaseState",
    "ermakov_lewis_invariant",
    "hamiltonian_flow",
    "integrate_coupled",
    "oscillator_energy",
    "GridSpec",
    "MilneGrid",
    "MilneSample",
    "SuperpositionConstants",
    "integrate_pinney",
    "milne_amplitude",
    "milne_density",
    "milne_grid",
    "superposition_constants",
    "GAP_CONSTANT",
    "DensityCurve",
    "DensityKind",
    "coulomb_density",
    "coulomb_phase_derivative",
    "coulomb_phase_function",
    "density_curve",
    "density_gap",
    "riemann_zero_density",
    "smooth_zero_count",
    "ZeroTable",
    "empirical_density",
    "load_zero_table",
    "riemann_siegel_theta",
    "scan_zeros",
    "z_function",
    "zeta_half_line",
    "MilnezetaError",
    "DomainError",
    "PoleError",
    "RangeError",
    "ToleranceError",
    "AmplitudeCollapseError",
    "DegenerateAlphaError",
    "AbscissaMismatchError",
    "ZeroTableError",
]
