"""Dense truncated two-mode Fock-space oracle.

Basis states ``|n_phot, m_phon>`` with ``0 <= n, m <= n_max`` are flattened
row-major: ``index = n * (n_max + 1) + m``. Everything here is built from
ladder-operator matrices and exact diagonalization only, so it can check
the closed forms in :mod:`sbs_entangle.stokes` and
:mod:`sbs_entangle.antistokes` independently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np
import scipy.linalg

HERMITIAN_TOL = 1e-9
MAX_TRUNCATION = 60


@dataclass(frozen=True)
class FockBasis:
    n_max: int

    def __post_init__(self):
        if not 0 <= self.n_max <= MAX_TRUNCATION:
            raise ValueError(f"n_max must be in [0, {MAX_TRUNCATION}], got {self.n_max}")

    @property
    def cutoff(self) -> int:
        return self.n_max + 1

    @property
    def dim(self) -> int:
        return self.cutoff**2

    def index(self, n: int, m: int) -> int:
        if not (0 <= n <= self.n_max and 0 <= m <= self.n_max):
            raise IndexError(f"|{n},{m}> outside truncation n_max={self.n_max}")
        return n * self.cutoff + m

    def occupations(self, index: int) -> tuple[int, int]:
        return divmod(index, self.cutoff)

    @cached_property
    def photon_numbers(self) -> np.ndarray:
        return np.repeat(np.arange(self.cutoff), self.cutoff)

    @cached_property
    def phonon_numbers(self) -> np.ndarray:
        return np.tile(np.arange(self.cutoff), self.cutoff)

    def interior(self, limit: int | None = None) -> np.ndarray:
        """Flat indices with ``n, m <= limit`` (default ``n_max // 2``)."""
        limit = self.n_max // 2 if limit is None else limit
        mask = (self.photon_numbers <= limit) & (self.phonon_numbers <= limit)
        return np.flatnonzero(mask)


@dataclass(frozen=True, eq=False)
class FockOperator:
    basis: FockBasis
    matrix: np.ndarray

    def __matmul__(self, other):
        if isinstance(other, FockState):
            return FockState(self.basis, self.matrix @ other.amplitudes)
        if isinstance(other, FockOperator):
            return FockOperator(self.basis, self.matrix @ other.matrix)
        return NotImplemented

    @property
    def dag(self) -> "FockOperator":
        return FockOperator(self.basis, self.matrix.conj().T)

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T), initial=0.0))

    def element(self, bra: tuple[int, int], ket: tuple[int, int]) -> complex:
        return self.matrix[self.basis.index(*bra), self.basis.index(*ket)]


@dataclass(frozen=True, eq=False)
class FockState:
    basis: FockBasis
    amplitudes: np.ndarray

    @classmethod
    def number_state(cls, basis: FockBasis, n: int, m: int) -> "FockState":
        amps = np.zeros(basis.dim, dtype=complex)
        amps[basis.index(n, m)] = 1.0
        return cls(basis, amps)

    @classmethod
    def vacuum(cls, basis: FockBasis) -> "FockState":
        return cls.number_state(basis, 0, 0)

    def amplitude(self, n: int, m: int) -> complex:
        return self.amplitudes[self.basis.index(n, m)]

    def as_grid(self) -> np.ndarray:
        """Amplitudes reshaped to ``[n_phot, m_phon]``."""
        return self.amplitudes.reshape(self.basis.cutoff, self.basis.cutoff)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "FockState":
        return FockState(self.basis, self.amplitudes / self.norm())

    def overlap(self, other: "FockState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def _annihilation(cutoff: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), k=1)


def ladder_operators(basis: FockBasis) -> tuple[np.ndarray, np.ndarray]:
    """Photon and phonon annihilation matrices ``(a, b)`` on the product space."""
    a1 = _annihilation(basis.cutoff)
    eye = np.eye(basis.cutoff)
    return np.kron(a1, eye), np.kron(eye, a1)


def number_operators(basis: FockBasis) -> tuple[np.ndarray, np.ndarray]:
    return (
        np.diag(basis.photon_numbers.astype(float)),
        np.diag(basis.phonon_numbers.astype(float)),
    )


def build_stokes_hamiltonian(p, n_max: int) -> FockOperator:
    """``dw a^dag a + W b^dag b + f (a^dag b^dag + a b)`` from a :class:`StokesParams`."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    basis = FockBasis(n_max)
    a, b = ladder_operators(basis)
    na, nb = number_operators(basis)
    pair = a.T @ b.T
    H = p.delta_omega_s * na + p.Omega_s * nb + p.f_s * (pair + pair.T)
    return FockOperator(basis, H.astype(complex))


def build_antistokes_hamiltonian(p, n_max: int) -> FockOperator:
    """``dw a^dag a + W b^dag b + f^* b^dag a + f a^dag b`` from an :class:`AntiStokesParams`."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    basis = FockBasis(n_max)
    a, b = ladder_operators(basis)
    na, nb = number_operators(basis)
    f = complex(p.f_as)
    H = p.delta_omega_as * na + p.Omega_as * nb + np.conj(f) * (b.T @ a) + f * (a.T @ b)
    return FockOperator(basis, H)


def build_squeeze_operator(r: float, n_max: int, method: str = "exponential") -> FockOperator:
    """Two-mode squeeze operator ``exp(r (a^dag b^dag - a b))`` on the truncated space.

    ``method='exponential'`` exponentiates the generator directly;
    ``method='factored'`` uses the normal-ordered product
    ``exp(tanh r a^dag b^dag) exp(-ln cosh r (N_a + N_b + 1)) exp(-tanh r a b)``.
    The two agree away from the truncation edge.
    """
    if r != 0 and math.tanh(abs(r)) ** n_max >= 1e-12:
        raise ValueError(
            f"truncation n_max={n_max} too small for r={r}: need tanh(r)**n_max < 1e-12"
        )
    basis = FockBasis(n_max)
    a, b = ladder_operators(basis)
    pair = a.T @ b.T
    if method == "exponential":
        S = scipy.linalg.expm(r * (pair - pair.T))
    elif method == "factored":
        t = math.tanh(r)
        total = basis.photon_numbers + basis.phonon_numbers + 1
        middle = np.exp(-math.log(math.cosh(r)) * total)
        S = scipy.linalg.expm(t * pair) @ (middle[:, None] * scipy.linalg.expm(-t * pair.T))
    else:
        raise ValueError(f"unknown method {method!r}")
    return FockOperator(basis, S.astype(complex))


def _check_hermitian(H: FockOperator):
    err = H.hermiticity_error()
    if err > HERMITIAN_TOL:
        raise ValueError(f"operator is not Hermitian (max |H - H^dag| = {err:.3e})")


def eigenvalues(H: FockOperator) -> np.ndarray:
    """Full real spectrum in ascending order."""
    _check_hermitian(H)
    return scipy.linalg.eigvalsh(H.matrix)


def eigensystem(H: FockOperator) -> tuple[np.ndarray, np.ndarray]:
    _check_hermitian(H)
    return scipy.linalg.eigh(H.matrix)


def ground_state(H: FockOperator) -> tuple[float, FockState]:
    """Lowest eigenpair, phase-fixed so the vacuum amplitude is real and non-negative."""
    w, v = eigensystem(H)
    vec = v[:, 0]
    phase = vec[0] / abs(vec[0]) if abs(vec[0]) > 0 else 1.0
    return float(w[0]), FockState(H.basis, vec / phase)


def evolve_state(H: FockOperator, psi0: FockState, t):
    """``exp(-i H t) psi0`` by spectral decomposition.

    A scalar ``t`` returns one :class:`FockState`; an array returns a list.
    """
    w, v = eigensystem(H)
    coeffs = v.conj().T @ psi0.amplitudes
    times = np.atleast_1d(np.asarray(t, dtype=float))
    phases = np.exp(-1j * np.outer(times, w))
    out = [FockState(H.basis, v @ (ph * coeffs)) for ph in phases]
    return out[0] if np.ndim(t) == 0 else out


def number_expectations(psi: FockState) -> dict:
    p = np.abs(psi.amplitudes) ** 2
    return {
        "n_phot": float(p @ psi.basis.photon_numbers),
        "n_phon": float(p @ psi.basis.phonon_numbers),
    }


def phonon_parity(basis: FockBasis) -> FockOperator:
    """``(-1)^{N_b}``: a local unitary on the phonon mode (flips ``b -> -b``)."""
    return FockOperator(basis, np.diag((-1.0) ** basis.phonon_numbers).astype(complex))


def reduced_photon_density(psi: FockState) -> np.ndarray:
    """Photon density matrix after tracing out the phonon."""
    grid = psi.as_grid()
    return grid @ grid.conj().T


def entanglement_entropy(psi: FockState) -> float:
    """Von Neumann entropy (nats) of the photon reduced state."""
    p = scipy.linalg.eigvalsh(reduced_photon_density(psi))
    p = p[p > 1e-300]
    return float(-(p * np.log(p)).sum())


def commutator_norm(H: FockOperator, other: np.ndarray) -> float:
    M = H.matrix
    return float(np.linalg.norm(M @ other - other @ M))


def dump_state(psi: FockState, path) -> None:
    """Write one ``index real imag`` line per basis state."""
    lines = [f"# fock-state n_max={psi.basis.n_max} index=n*(n_max+1)+m"]
    lines += [f"{i} {c.real:.17g} {c.imag:.17g}" for i, c in enumerate(psi.amplitudes.astype(complex))]
    Path(path).write_text("\n".join(lines) + "\n")


def load_state(path) -> FockState:
    text = Path(path).read_text().splitlines()
    header = text[0]
    n_max = int(header.split("n_max=")[1].split()[0])
    basis = FockBasis(n_max)
    amps = np.zeros(basis.dim, dtype=complex)
    for line in text[1:]:
        if not line.strip() or line.startswith("#"):
            continue
        i, re, im = line.split()
        amps[int(i)] = complex(float(re), float(im))
    return FockState(basis, amps)


def dump_operator(op: FockOperator, path, tol: float = 0.0) -> None:
    """Write ``row col real imag`` lines for entries with modulus above ``tol``."""
    lines = [f"# fock-operator n_max={op.basis.n_max} index=n*(n_max+1)+m"]
    rows, cols = np.nonzero(np.abs(op.matrix) > tol)
    for i, j in zip(rows, cols):
        c = op.matrix[i, j]
        lines.append(f"{i} {j} {c.real:.17g} {c.imag:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_operator(path) -> FockOperator:
    text = Path(path).read_text().splitlines()
    n_max = int(text[0].split("n_max=")[1].split()[0])
    basis = FockBasis(n_max)
    M = np.zeros((basis.dim, basis.dim), dtype=complex)
    for line in text[1:]:
        if not line.strip() or line.startswith("#"):
            continue
        i, j, re, im = line.split()
        M[int(i), int(j)] = complex(float(re), float(im))
    return FockOperator(basis, M)
