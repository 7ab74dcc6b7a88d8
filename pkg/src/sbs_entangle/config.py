"""Scenario configuration read from an INI-style file.

Every quantity carries its unit in the key name. Missing keys fall back
to the silicon-nanowire defaults (g = 1 MHz, u = 1 MHz, 1e12 pump photons
per second, 10 GHz phonon)::

    [model]
    omega10_ghz = 200
    omega20_ghz = 100
    v_g_ghz = 1
    omega_phonon_ghz = 10
    g_s_mhz = 1
    g_as_mhz = 1
    g_as_phase_rad = 0
    u_mhz = 1
    n_p_in_per_s = 1e12
    omega_p_hz = 1e15
    k_p = 900

    [sweep]
    min_ghz = -5
    max_ghz = 5
    points = 201

    [fock]
    n_max = 30

    [environment]
    temperature_k = 0.01
    gamma_phonon_mhz = 1
    gamma_photon_mhz = 0

    [output]
    format = csv
    path =
"""
from __future__ import annotations

import cmath
import configparser
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .kinematics import (
    BranchDispersion,
    CouplingParams,
    PhononBranch,
    PumpDrive,
    effective_coupling,
    pump_steady_state,
)

_SECTIONS = {
    "model": (
        "omega10_ghz", "omega20_ghz", "v_g_ghz", "omega_phonon_ghz", "g_s_mhz", "g_as_mhz",
        "g_as_phase_rad", "u_mhz", "n_p_in_per_s", "omega_p_hz", "k_p",
    ),
    "sweep": ("min_ghz", "max_ghz", "points"),
    "fock": ("n_max",),
    "environment": ("temperature_k", "gamma_phonon_mhz", "gamma_photon_mhz"),
    "output": ("format", "path"),
}


@dataclass(frozen=True)
class ScenarioConfig:
    omega10_ghz: float = 200.0
    omega20_ghz: float = 100.0
    v_g_ghz: float = 1.0
    omega_phonon_ghz: float = 10.0
    g_s_mhz: float = 1.0
    g_as_mhz: float = 1.0
    g_as_phase_rad: float = 0.0
    u_mhz: float = 1.0
    n_p_in_per_s: float = 1e12
    omega_p_hz: float = 1e15
    k_p: float = 900.0
    min_ghz: float = -5.0
    max_ghz: float = 5.0
    points: int = 201
    n_max: int = 30
    temperature_k: float = 0.01
    gamma_phonon_mhz: float = 1.0
    gamma_photon_mhz: float = 0.0
    format: str = "csv"
    path: str = ""

    def __post_init__(self):
        if not self.min_ghz < self.max_ghz:
            raise ValueError(f"sweep min ({self.min_ghz}) must be below max ({self.max_ghz})")
        if self.points < 2:
            raise ValueError(f"sweep needs at least 2 points, got {self.points}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"output format must be csv or json, got {self.format!r}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {self.n_max}")
        # surface invariant violations at load time
        self.branches()
        self.phonon()
        self.drive()
        self.couplings()

    def with_overrides(self, **kwargs) -> "ScenarioConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def branches(self) -> BranchDispersion:
        return BranchDispersion(self.omega10_ghz, self.omega20_ghz, self.v_g_ghz)

    def phonon(self) -> PhononBranch:
        return PhononBranch(self.omega_phonon_ghz)

    def drive(self) -> PumpDrive:
        return PumpDrive(
            n_p_in=self.n_p_in_per_s, u=self.u_mhz * 1e6, k_p=self.k_p, omega_p_hz=self.omega_p_hz
        )

    def couplings(self) -> CouplingParams:
        g_as = self.g_as_mhz * cmath.exp(1j * self.g_as_phase_rad)
        return CouplingParams(g_s=self.g_s_mhz * 1e-3, g_as=g_as * 1e-3)

    def f_s_ghz(self) -> float:
        """Stokes effective coupling in GHz; the phase of g_s is absorbed."""
        return abs(effective_coupling(self.couplings().g_s, pump_steady_state(self.drive())))

    def f_as_ghz(self) -> complex:
        return effective_coupling(self.couplings().g_as, pump_steady_state(self.drive()))


def load_config(path=None) -> ScenarioConfig:
    """Read a config file; ``None`` gives the defaults. Unknown keys are rejected."""
    if path is None:
        return ScenarioConfig()
    parser = configparser.ConfigParser()
    with open(Path(path)) as fh:
        parser.read_file(fh)
    types = {f.name: f.type for f in fields(ScenarioConfig)}
    values = {}
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ValueError(f"unknown config section [{section}]")
        for key, raw in parser.items(section):
            if key not in _SECTIONS[section]:
                raise ValueError(f"unknown key {key!r} in [{section}]")
            kind = types[key]
            try:
                values[key] = int(raw) if kind == "int" else float(raw) if kind == "float" else raw
            except ValueError as exc:
                raise ValueError(f"bad value for {section}.{key}: {raw!r}") from exc
    return ScenarioConfig(**values)
