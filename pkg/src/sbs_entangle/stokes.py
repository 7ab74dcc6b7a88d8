"""Stokes process: two-mode squeezing of a photon-phonon pair.

In the frame rotating with the pump the linearized Hamiltonian is

    H = dw a^dag a + W b^dag b + f (a^dag b^dag + a b)

with ``dw = omega_p - omega_s`` the Stokes detuning, ``W`` the phonon
frequency and ``f`` the (real, non-negative) pump-enhanced coupling. A
Bogoliubov transform with squeeze parameter ``r`` brings it to
``w0 + w_alpha alpha^dag alpha + w_beta beta^dag beta``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import StabilityViolation


@dataclass(frozen=True)
class StokesParams:
    delta_omega_s: float
    Omega_s: float
    f_s: float

    def __post_init__(self):
        if isinstance(self.f_s, complex) or self.f_s < 0:
            raise ValueError(
                f"Stokes coupling must be real and non-negative, got {self.f_s!r}; "
                "absorb its phase into the phonon operator first"
            )

    @classmethod
    def from_detuning(cls, delta_s: float, Omega_s: float, f_s: float) -> "StokesParams":
        """Build from the half-detuning ``delta_s = (dw - W)/2``."""
        return cls(delta_omega_s=Omega_s + 2.0 * delta_s, Omega_s=Omega_s, f_s=f_s)

    @property
    def mean_frequency(self) -> float:
        return 0.5 * (self.delta_omega_s + self.Omega_s)

    @property
    def delta_s(self) -> float:
        return 0.5 * (self.delta_omega_s - self.Omega_s)

    @property
    def stable(self) -> bool:
        return self.mean_frequency > self.f_s


@dataclass(frozen=True)
class StokesDiagonalization:
    r: float
    cosh2: float
    sinh2: float
    Delta_s: float
    delta_s: float
    omega_alpha: float
    omega_beta: float
    omega_0: float


@dataclass(frozen=True)
class SqueezedStateExpansion:
    r: float
    amplitudes: np.ndarray

    @property
    def n_max(self) -> int:
        return len(self.amplitudes) - 1


def diagonalize_stokes(p: StokesParams) -> StokesDiagonalization:
    wbar = p.mean_frequency
    f = p.f_s
    if not wbar > f:
        raise StabilityViolation(
            f"unstable Stokes parameters: mean frequency {wbar} <= coupling {f}"
        )
    Delta = math.sqrt((wbar - f) * (wbar + f))
    # wbar - Delta without cancellation
    gap = f * f / (wbar + Delta)
    cosh2 = (wbar + Delta) / (2.0 * Delta)
    sinh2 = gap / (2.0 * Delta)
    # tanh(2r) = f / wbar
    r = 0.5 * math.atanh(f / wbar)
    delta = p.delta_s
    return StokesDiagonalization(
        r=r,
        cosh2=cosh2,
        sinh2=sinh2,
        Delta_s=Delta,
        delta_s=delta,
        omega_alpha=Delta + delta,
        omega_beta=Delta - delta,
        omega_0=-gap,
    )


def squeezed_amplitudes(r: float, n_max: int) -> SqueezedStateExpansion:
    """Pair amplitudes ``c_n = tanh(r)**n / cosh(r)`` of ``S(r)|0,0>`` for ``n = 0..n_max``."""
    if r < 0:
        raise ValueError(f"squeeze parameter must be non-negative, got {r}")
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    n = np.arange(n_max + 1)
    return SqueezedStateExpansion(r=r, amplitudes=np.tanh(r) ** n / np.cosh(r))


def squeezed_statistics(r: float) -> dict:
    """Mean pair number and photon-phonon entanglement entropy (nats) of ``S(r)|0,0>``."""
    if r < 0:
        raise ValueError(f"squeeze parameter must be non-negative, got {r}")
    s2 = math.sinh(r) ** 2
    c2 = 1.0 + s2
    entropy = c2 * math.log(c2) - (s2 * math.log(s2) if s2 > 0 else 0.0)
    return {"mean_pairs": s2, "entanglement_entropy": entropy}


def bell_approximation(r: float, n_max: int = 50) -> dict:
    """Two-term truncation ``|0,0> + r|1,1>`` of the squeezed state and its fidelity.

    Fidelity is taken against the expansion up to ``n_max`` pairs.
    """
    if r < 0:
        raise ValueError(f"squeeze parameter must be non-negative, got {r}")
    norm = math.sqrt(1.0 + r * r)
    two_term = np.array([1.0, r]) / norm
    full = squeezed_amplitudes(r, max(n_max, 1)).amplitudes
    overlap = two_term @ full[:2]
    return {"two_term_state": two_term, "fidelity_vs_full": float(overlap**2)}


def bogoliubov_coefficients_check(p: StokesParams) -> float:
    """Residual of the off-diagonal elimination condition for the computed transform.

    Evaluates ``|2 wbar cosh(r) sinh(r) - f (cosh^2 r + sinh^2 r)|`` from the
    returned fractions; it vanishes for a correct diagonalization.
    """
    d = diagonalize_stokes(p)
    cs = math.sqrt(d.cosh2 * d.sinh2)
    return abs(2.0 * p.mean_frequency * cs - p.f_s * (d.cosh2 + d.sinh2))
