"""Closed-form vs. truncated-Fock cross checks.

Each check returns a :class:`Check` with the measured residual and its
tolerance; :func:`run_checks` collects them for a scenario.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .antistokes import AntiStokesParams, diagonalize_antistokes, photon_population_dynamics
from .stokes import (
    StokesParams,
    diagonalize_stokes,
    squeezed_amplitudes,
    squeezed_statistics,
)


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tol: float
    # "max": pass if value <= tol; "min": pass if value >= tol
    kind: str = "max"

    @property
    def passed(self) -> bool:
        if not math.isfinite(self.value):
            return False
        return self.value <= self.tol if self.kind == "max" else self.value >= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.kind == "max":
            return f"[{status}] {self.name}: {self.value:.3e} (<= {self.tol:.0e})"
        return f"[{status}] {self.name}: {self.value:.12f} (>= {self.tol:.12f})"


def squeezed_fock_state(r: float, basis: fock.FockBasis) -> fock.FockState:
    amps = np.zeros(basis.dim, dtype=complex)
    for n, c in enumerate(squeezed_amplitudes(r, basis.n_max).amplitudes):
        amps[basis.index(n, n)] = c
    return fock.FockState(basis, amps)


def stokes_ground_checks(p: StokesParams, n_max: int) -> list[Check]:
    """Ground energy, ground-state fidelity and pair structure of the Stokes Hamiltonian.

    The oracle ground state is ``S(-r)|0,0>``, which is ``S(r)|0,0>`` after the
    local phonon parity ``(-1)^{N_b}``; fidelity is measured after that map.
    """
    d = diagonalize_stokes(p)
    H = fock.build_stokes_hamiltonian(p, n_max)
    E0, g = fock.ground_state(H)
    target = fock.phonon_parity(g.basis) @ squeezed_fock_state(d.r, g.basis)
    denom = abs(d.omega_0) if d.omega_0 != 0 else 1.0
    grid = g.as_grid()
    off_pair = np.abs(grid - np.diag(np.diag(grid))).max()
    occ = fock.number_expectations(g)
    stats = squeezed_statistics(d.r)
    return [
        Check("stokes ground energy vs omega_0 (relative)", abs(E0 - d.omega_0) / denom, 1e-6),
        Check("stokes ground-state fidelity vs pair expansion", abs(g.overlap(target)) ** 2, 1 - 1e-6, "min"),
        Check("stokes off-pair amplitudes", float(off_pair), 1e-10),
        Check("stokes photon number vs sinh^2 r", abs(occ["n_phot"] - d.sinh2), 1e-9),
        Check("stokes phonon number vs sinh^2 r", abs(occ["n_phon"] - d.sinh2), 1e-9),
        Check(
            "stokes entanglement entropy vs closed form",
            abs(fock.entanglement_entropy(g) - stats["entanglement_entropy"]),
            1e-9,
        ),
    ]


def stokes_spectrum_check(p: StokesParams, n_max: int, levels: int = 6) -> Check:
    """Lowest levels against the lattice ``omega_0 + a omega_alpha + b omega_beta``."""
    d = diagonalize_stokes(p)
    lattice = sorted(
        d.omega_0 + a * d.omega_alpha + b * d.omega_beta
        for a, b in itertools.product(range(levels), repeat=2)
    )[:levels]
    w = fock.eigenvalues(fock.build_stokes_hamiltonian(p, n_max))[:levels]
    scale = max(abs(d.omega_alpha), abs(d.omega_beta))
    return Check("stokes low spectrum vs Bogoliubov lattice (relative)", float(np.max(np.abs(w - lattice))) / scale, 1e-8)


def truncation_residuals(p: StokesParams, truncations=(10, 20, 30)) -> list[float]:
    d = diagonalize_stokes(p)
    return [
        abs(fock.eigenvalues(fock.build_stokes_hamiltonian(p, n))[0] - d.omega_0)
        for n in truncations
    ]


def squeeze_checks(r: float, n_max: int = 12, interior: int = 6) -> list[Check]:
    S_exp = fock.build_squeeze_operator(r, n_max, "exponential")
    S_fac = fock.build_squeeze_operator(r, n_max, "factored")
    idx = S_exp.basis.interior(interior)
    block = (S_exp.matrix - S_fac.matrix)[np.ix_(idx, idx)]
    vac = fock.FockState.vacuum(S_exp.basis)
    out = S_exp @ vac
    c = squeezed_amplitudes(r, interior).amplitudes
    amp_err = max(abs(out.amplitude(n, n) - c[n]) for n in range(interior + 1))
    cols = np.linalg.norm(S_exp.matrix[:, idx], axis=0)
    return [
        Check("squeeze exponential vs factored (interior, 2-norm)", float(np.linalg.norm(block, 2)), 1e-8),
        Check("squeeze S|0,0> vs pair amplitudes", float(amp_err), 1e-10),
        Check("squeeze unitarity on interior columns", float(np.max(np.abs(cols - 1))), 1e-8),
    ]


def antistokes_checks(p: AntiStokesParams, n_max: int = 4) -> list[Check]:
    d = diagonalize_antistokes(p)
    tag = f" [delta_as={p.delta_as:g}]"
    H = fock.build_antistokes_hamiltonian(p, n_max)
    basis = H.basis
    single = [basis.index(1, 0), basis.index(0, 1)]
    w1 = fock.eigenvalues(fock.FockOperator(basis, H.matrix[np.ix_(single, single)]))
    low = np.flatnonzero(basis.photon_numbers + basis.phonon_numbers <= 2)
    w2 = fock.eigenvalues(fock.FockOperator(basis, H.matrix[np.ix_(low, low)]))
    lattice = sorted(
        a * d.Omega_plus + b * d.Omega_minus for a in range(3) for b in range(3) if a + b <= 2
    )
    na, nb = fock.number_operators(basis)
    scale = max(abs(d.Omega_plus), abs(d.Omega_minus), 1.0)
    return [
        Check(
            "anti-Stokes single-excitation eigenvalues vs Omega_pm" + tag,
            float(np.max(np.abs(w1 - [d.Omega_minus, d.Omega_plus]))) / scale,
            1e-12,
        ),
        Check("anti-Stokes spectrum up to 2 excitations vs polariton lattice" + tag, float(np.max(np.abs(w2 - lattice))) / scale, 1e-12),
        Check("anti-Stokes [H, N_a + N_b]" + tag, fock.commutator_norm(H, na + nb), 1e-12),
        Check("anti-Stokes Hermiticity" + tag, H.hermiticity_error(), 1e-12),
    ]


def rabi_check(p: AntiStokesParams, times, n_max: int = 4) -> Check:
    H = fock.build_antistokes_hamiltonian(p, n_max)
    psi0 = fock.FockState.number_state(H.basis, 1, 0)
    numeric = np.array([abs(s.amplitude(1, 0)) ** 2 for s in fock.evolve_state(H, psi0, times)])
    closed = photon_population_dynamics(p, times)
    return Check("anti-Stokes photon population vs Rabi formula", float(np.max(np.abs(numeric - closed))), 1e-8)


def run_checks(
    delta_omega_s: float,
    Omega: float,
    f_s: float,
    f_as: complex,
    n_max: int = 30,
) -> list[Check]:
    """Full oracle suite at Stokes detuning ``delta_omega_s`` and anti-Stokes resonance.

    Raises :class:`~sbs_entangle.errors.StabilityViolation` for unstable Stokes input.
    """
    if n_max < 20:
        raise ValueError(f"verification needs n_max >= 20, got {n_max}")
    ps = StokesParams(delta_omega_s, Omega, f_s)
    d = diagonalize_stokes(ps)
    checks = stokes_ground_checks(ps, n_max)
    H = fock.build_stokes_hamiltonian(ps, n_max)
    na, nb = fock.number_operators(H.basis)
    checks.append(Check("stokes [H, N_a - N_b]", fock.commutator_norm(H, na - nb), 1e-12))
    checks.append(Check("stokes Hermiticity", H.hermiticity_error(), 1e-12))
    # break the alpha/beta degeneracy so lattice assignment is unambiguous
    checks.append(stokes_spectrum_check(StokesParams(delta_omega_s + 2.0, Omega, f_s), n_max))
    if d.r > 0:
        checks += squeeze_checks(d.r)

    # strongly squeezed point where truncation error is resolvable
    strong = StokesParams(Omega, Omega, 0.8 * Omega)
    res = truncation_residuals(strong, (10, n_max))
    checks.append(Check(f"truncation residual shrinks (n_max 10 -> {n_max}: {res[0]:.2e} -> {res[1]:.2e})",
                        res[1] / res[0] if res[0] > 0 else 0.0, 0.1))

    pa = AntiStokesParams(Omega, Omega, f_as)
    if pa.Delta_as > 0:
        checks += antistokes_checks(pa)
        checks += antistokes_checks(AntiStokesParams(Omega + 2.0, Omega, f_as))
        t_swap = math.pi / (2 * abs(f_as))
        H = fock.build_antistokes_hamiltonian(pa, 4)
        psi = fock.evolve_state(H, fock.FockState.number_state(H.basis, 1, 0), t_swap)
        checks.append(Check("anti-Stokes full photon->phonon transfer at pi/(2f)", abs(1 - abs(psi.amplitude(0, 1)) ** 2), 1e-8))
        checks.append(rabi_check(pa, np.linspace(0, 4 * t_swap, 50)))
    return checks
