"""Model parameters, phase matching and pump linearization.

All frequencies are in one consistent unit (GHz by convention) with hbar
factored out. Wavenumbers are in whatever unit makes ``v_g`` a frequency
per wavenumber.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

STOKES_PUMP_BRANCH = 2
SCATTERED_BRANCH = 1


class Process(str, Enum):
    STOKES = "stokes"
    ANTI_STOKES = "anti-stokes"


@dataclass(frozen=True)
class BranchDispersion:
    """Two linear photon branches ``omega_i(k) = omega0[i] + v_g * k`` sharing one group velocity."""

    omega10: float
    omega20: float
    v_g: float

    def __post_init__(self):
        if not self.v_g > 0:
            raise ValueError(f"group velocity must be positive, got {self.v_g}")
        for w in (self.omega10, self.omega20):
            if not (math.isfinite(w) and w >= 0):
                raise ValueError(f"branch offset must be finite and non-negative, got {w}")

    def offset(self, branch: int) -> float:
        if branch == 1:
            return self.omega10
        if branch == 2:
            return self.omega20
        raise ValueError(f"branch must be 1 or 2, got {branch}")

    def frequency(self, k, branch: int = 1):
        return photon_frequency(self.offset(branch), self.v_g, k)

    def wavenumber(self, omega, branch: int = 1):
        return (omega - self.offset(branch)) / self.v_g


@dataclass(frozen=True)
class PhononBranch:
    """Dispersionless vibrational branch."""

    Omega: float

    def __post_init__(self):
        if not self.Omega > 0:
            raise ValueError(f"phonon frequency must be positive, got {self.Omega}")


@dataclass(frozen=True)
class PumpDrive:
    """External pump drive.

    ``n_p_in`` is the incident photon flux (1/s) and ``u`` the multiplexer
    coupling rate (Hz); their ratio is taken as a dimensionless photon number.
    ``omega_p_hz`` is the absolute optical frequency, kept for bookkeeping
    only: detunings are the working quantities everywhere else.
    ``omega_pump`` (model units) pins the pump frequency; when ``None`` it is
    read off the pump branch at ``k_p``.
    """

    n_p_in: float
    u: float
    k_p: float = 0.0
    omega_p_hz: float = 1e15
    branch: int = STOKES_PUMP_BRANCH
    omega_pump: float | None = None

    def __post_init__(self):
        if self.n_p_in < 0:
            raise ValueError(f"pump flux must be non-negative, got {self.n_p_in}")
        if not self.u > 0:
            raise ValueError(f"multiplexer coupling must be positive, got {self.u}")


@dataclass(frozen=True)
class CouplingParams:
    g_s: complex
    g_as: complex

    def __post_init__(self):
        if not (math.isfinite(abs(self.g_s)) and math.isfinite(abs(self.g_as))):
            raise ValueError("couplings must be finite")


@dataclass(frozen=True)
class ProcessKinematics:
    """Phase-matched triplet for one scattering process.

    ``q_phonon`` is signed; ``q_phonon * k_pump > 0`` means the phonon
    co-propagates with the pump.
    """

    process: Process
    omega_pump: float
    k_pump: float
    omega_scattered: float
    k_scattered: float
    q_phonon: float
    Omega_phonon: float

    @property
    def copropagating(self) -> bool:
        return self.q_phonon * self.k_pump > 0


@dataclass(frozen=True)
class PumpField:
    n_p: float

    @property
    def amplitude(self) -> float:
        return math.sqrt(self.n_p)


def photon_frequency(omega0, v_g, k):
    return omega0 + v_g * k


def _pump_point(branches: BranchDispersion, pump: PumpDrive):
    if pump.omega_pump is not None:
        return pump.omega_pump, pump.k_p
    return branches.frequency(pump.k_p, pump.branch), pump.k_p


def _matched(process, branches, phonon, pump, sign):
    if branches.v_g == 0:
        raise ValueError("group velocity must be non-zero")
    omega_p, k_p = _pump_point(branches, pump)
    omega = omega_p + sign * phonon.Omega
    k = branches.wavenumber(omega, SCATTERED_BRANCH)
    return ProcessKinematics(
        process=process,
        omega_pump=omega_p,
        k_pump=k_p,
        omega_scattered=omega,
        k_scattered=k,
        q_phonon=k_p - k,
        Omega_phonon=phonon.Omega,
    )


def solve_stokes_matching(
    branches: BranchDispersion, phonon: PhononBranch, pump: PumpDrive
) -> ProcessKinematics:
    """Pump on branch 2 scatters to a lower-frequency photon on branch 1 plus a phonon.

    Energy: ``omega_s = omega_p - Omega``. Momentum: ``q_s = k_p - k_s``.
    """
    return _matched(Process.STOKES, branches, phonon, pump, -1.0)


def solve_antistokes_matching(
    branches: BranchDispersion, phonon: PhononBranch, pump: PumpDrive
) -> ProcessKinematics:
    """Pump on branch 2 absorbs a phonon and scatters to branch 1 at ``omega_p + Omega``."""
    return _matched(Process.ANTI_STOKES, branches, phonon, pump, +1.0)


def pump_steady_state(drive: PumpDrive) -> PumpField:
    # steady state of d/dt a = -u a + sqrt(u) c_in
    if drive.u == 0:
        raise ValueError("multiplexer coupling u must be non-zero")
    return PumpField(n_p=drive.n_p_in / drive.u)


def effective_coupling(g, pump: PumpField):
    """Pump-enhanced coupling ``g * sqrt(n_p)``; the phase of ``g`` is kept."""
    return g * pump.amplitude
