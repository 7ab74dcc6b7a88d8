"""Anti-Stokes process: beam-splitter mixing of photon and phonon into polaritons.

Rotating-frame Hamiltonian::

    H = dw a^dag a + W b^dag b + (f^* b^dag a + f a^dag b)

with ``dw = omega_as - omega_p``. Collective operators
``A_pm = X_pm b + Y_pm a`` diagonalize it with frequencies
``Omega_pm = (dw + W)/2 +- Delta``, ``Delta = sqrt(delta^2 + |f|^2)``.

Frequencies in GHz are read as angular (rad/ns), so time in ns enters
``exp(-i H t)`` without factors of 2 pi.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCoupling


@dataclass(frozen=True)
class AntiStokesParams:
    delta_omega_as: float
    Omega_as: float
    f_as: complex

    @classmethod
    def from_detuning(cls, delta_as: float, Omega_as: float, f_as: complex) -> "AntiStokesParams":
        return cls(delta_omega_as=Omega_as + 2.0 * delta_as, Omega_as=Omega_as, f_as=f_as)

    @property
    def delta_as(self) -> float:
        return 0.5 * (self.delta_omega_as - self.Omega_as)

    @property
    def Delta_as(self) -> float:
        return math.hypot(self.delta_as, abs(self.f_as))


@dataclass(frozen=True)
class PolaritonDiagonalization:
    Omega_plus: float
    Omega_minus: float
    X_plus: complex
    X_minus: complex
    Y_plus: complex
    Y_minus: complex
    # |X|^2 and |Y|^2 evaluated from the closed form, not by squaring X, Y
    x_plus_sq: float
    x_minus_sq: float
    y_plus_sq: float
    y_minus_sq: float
    Delta_as: float
    delta_as: float

    def mode(self, sign: str) -> tuple[complex, complex]:
        """``(X, Y)`` for mode ``'+'`` or ``'-'``."""
        if sign == "+":
            return self.X_plus, self.Y_plus
        if sign == "-":
            return self.X_minus, self.Y_minus
        raise ValueError(f"mode must be '+' or '-', got {sign!r}")


def _branch(sign: int, delta: float, Delta: float, f: complex):
    # s = Delta - sign*delta, evaluated stably
    f2 = abs(f) ** 2
    if sign * delta > 0:
        s = f2 / (Delta + abs(delta))
    else:
        s = Delta + abs(delta)
    x_sq = s / (2.0 * Delta)
    y_sq = (2.0 * Delta - s) / (2.0 * Delta)
    X = sign * math.sqrt(x_sq)
    if s == 0:
        # uncoupled, purely photonic mode
        Y = complex(1.0)
    else:
        Y = f.conjugate() / math.sqrt(2.0 * Delta * s)
    return X, Y, x_sq, y_sq


def diagonalize_antistokes(p: AntiStokesParams) -> PolaritonDiagonalization:
    delta = p.delta_as
    f = complex(p.f_as)
    Delta = p.Delta_as
    if Delta == 0:
        raise DegenerateCoupling(
            "zero detuning and zero coupling: polariton transform undefined, use the bare modes"
        )
    Xp, Yp, xp, yp = _branch(+1, delta, Delta, f)
    Xm, Ym, xm, ym = _branch(-1, delta, Delta, f)
    centre = 0.5 * (p.delta_omega_as + p.Omega_as)
    return PolaritonDiagonalization(
        Omega_plus=centre + Delta,
        Omega_minus=centre - Delta,
        X_plus=Xp,
        X_minus=Xm,
        Y_plus=Yp,
        Y_minus=Ym,
        x_plus_sq=xp,
        x_minus_sq=xm,
        y_plus_sq=yp,
        y_minus_sq=ym,
        Delta_as=Delta,
        delta_as=delta,
    )


def apply_collective_creation(
    mode: str, state: tuple[int, int], diag: PolaritonDiagonalization, normalize: bool = False
) -> dict[tuple[int, int], complex]:
    """Act with ``A_pm^dag`` on the Fock state ``|n_phot, m_phon>``.

    Returns ``{(n_phot, m_phon): amplitude}``. The raw result is
    ``Y^* sqrt(n+1) |n+1, m> + X^* sqrt(m+1) |n, m+1>``; with ``normalize``
    it is rescaled to unit norm.
    """
    n, m = state
    if n < 0 or m < 0:
        raise ValueError(f"occupation numbers must be non-negative, got {state}")
    X, Y = diag.mode(mode)
    out = {
        (n + 1, m): complex(Y).conjugate() * math.sqrt(n + 1),
        (n, m + 1): complex(X).conjugate() * math.sqrt(m + 1),
    }
    if normalize:
        norm = math.sqrt(sum(abs(c) ** 2 for c in out.values()))
        out = {k: c / norm for k, c in out.items()}
    return out


def photon_population_dynamics(p: AntiStokesParams, t):
    """Photon probability at time ``t`` starting from ``|1_phot, 0_phon>``.

    Rabi oscillation in the single-excitation block:
    ``1 - |f|^2/Delta^2 * sin^2(Delta t)``. Accepts scalar or array ``t``.
    """
    Delta = p.Delta_as
    if Delta == 0:
        return np.ones_like(np.asarray(t, dtype=float))[()]
    depth = abs(p.f_as) ** 2 / Delta**2
    return 1.0 - depth * np.sin(Delta * np.asarray(t, dtype=float)) ** 2
