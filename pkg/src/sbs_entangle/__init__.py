"""Photon-phonon entangled states from inter-modal stimulated Brillouin scattering."""
from .antistokes import (
    AntiStokesParams,
    PolaritonDiagonalization,
    apply_collective_creation,
    diagonalize_antistokes,
    photon_population_dynamics,
)
from .environment import EnvironmentParams, RegimeReport, regime_check, thermal_occupation
from .errors import DegenerateCoupling, StabilityViolation
from .kinematics import (
    BranchDispersion,
    CouplingParams,
    PhononBranch,
    Process,
    ProcessKinematics,
    PumpDrive,
    PumpField,
    effective_coupling,
    photon_frequency,
    pump_steady_state,
    solve_antistokes_matching,
    solve_stokes_matching,
)
from .stokes import (
    StokesDiagonalization,
    StokesParams,
    bell_approximation,
    bogoliubov_coefficients_check,
    diagonalize_stokes,
    squeezed_amplitudes,
    squeezed_statistics,
)

__version__ = "0.1.0"
