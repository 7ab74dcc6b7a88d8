"""Thermal phonon occupation and coupling-regime checks.

Frequencies here are ordinary frequencies in Hz (``h * nu``, not
``hbar * omega``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.constants import h, k as k_B

DEFAULT_RATIO = 10.0
THERMAL_NEGLIGIBLE = 0.01


@dataclass(frozen=True)
class EnvironmentParams:
    temperature: float
    phonon_freq: float
    Gamma: float = 1e6
    gamma_photon: float = 0.0

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError(f"temperature must be positive, got {self.temperature}")
        if self.Gamma < 0 or self.gamma_photon < 0:
            raise ValueError("damping rates must be non-negative")


@dataclass(frozen=True)
class RegimeReport:
    n_thermal: float
    coupling_to_phonon_damping: float
    coupling_to_photon_damping: float
    threshold: float
    strong_coupling: bool
    photon_loss_negligible: bool
    thermal_negligible: bool


def thermal_occupation(freq, T):
    """Bose-Einstein mean occupation ``1 / (exp(h nu / k_B T) - 1)``.

    Works elementwise on arrays; overflow of the exponent gives 0.
    """
    freq = np.asarray(freq, dtype=float)
    T = np.asarray(T, dtype=float)
    if np.any(freq <= 0) or np.any(T <= 0):
        raise ValueError("frequency and temperature must be positive")
    with np.errstate(over="ignore"):
        n = 1.0 / np.expm1(h * freq / (k_B * T))
    return n[()] if n.ndim == 0 else n


def crossover_temperature(freq: float, occupation: float = 1.0) -> float:
    """Temperature at which the thermal occupation equals ``occupation``."""
    return h * freq / (k_B * math.log1p(1.0 / occupation))


def _ratio(f: float, rate: float) -> float:
    return math.inf if rate == 0 else abs(f) / rate


def regime_check(f: float, env: EnvironmentParams, threshold: float = DEFAULT_RATIO) -> RegimeReport:
    """Compare the effective coupling ``f`` (Hz) against losses and thermal noise."""
    n_th = float(thermal_occupation(env.phonon_freq, env.temperature))
    phon = _ratio(f, env.Gamma)
    phot = _ratio(f, env.gamma_photon)
    return RegimeReport(
        n_thermal=n_th,
        coupling_to_phonon_damping=phon,
        coupling_to_photon_damping=phot,
        threshold=threshold,
        strong_coupling=phon >= threshold,
        photon_loss_negligible=phot >= threshold,
        thermal_negligible=n_th < THERMAL_NEGLIGIBLE,
    )
