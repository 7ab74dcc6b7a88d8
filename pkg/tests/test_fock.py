import math

import numpy as np
import pytest

from sbs_entangle import fock
from sbs_entangle.antistokes import AntiStokesParams, diagonalize_antistokes
from sbs_entangle.stokes import StokesParams, diagonalize_stokes, squeezed_amplitudes


def test_basis_index_roundtrip():
    basis = fock.FockBasis(4)
    assert basis.dim == 25
    seen = set()
    for n in range(5):
        for m in range(5):
            i = basis.index(n, m)
            assert i == n * 5 + m
            assert basis.occupations(i) == (n, m)
            seen.add(i)
    assert seen == set(range(25))
    with pytest.raises(IndexError):
        basis.index(5, 0)


def test_basis_limits():
    with pytest.raises(ValueError):
        fock.FockBasis(61)
    with pytest.raises(ValueError):
        fock.FockBasis(-1)


def test_ladder_matrix_elements():
    basis = fock.FockBasis(3)
    a, b = fock.ladder_operators(basis)
    assert a[basis.index(1, 2), basis.index(2, 2)] == pytest.approx(math.sqrt(2))
    assert b[basis.index(0, 2), basis.index(0, 3)] == pytest.approx(math.sqrt(3))
    # modes commute
    assert np.allclose(a @ b, b @ a)
    assert np.allclose(a @ b.T, b.T @ a)


def test_uncoupled_stokes_is_diagonal():
    H = fock.build_stokes_hamiltonian(StokesParams(12.0, 10.0, 0.0), 3)
    basis = H.basis
    expected = 12.0 * basis.photon_numbers + 10.0 * basis.phonon_numbers
    assert np.allclose(H.matrix, np.diag(expected))
    assert np.allclose(fock.eigenvalues(H), np.sort(expected))


def test_minimal_pair_block():
    H = fock.build_stokes_hamiltonian(StokesParams(10.0, 10.0, 1.0), 1)
    idx = [H.basis.index(0, 0), H.basis.index(1, 1)]
    block = H.matrix[np.ix_(idx, idx)]
    assert np.allclose(block, [[0, 1], [1, 20]])
    w = fock.eigenvalues(fock.FockOperator(H.basis, block))
    assert np.allclose(w, [10 - math.sqrt(101), 10 + math.sqrt(101)])


@pytest.mark.parametrize("n_max", [2, 5])
def test_conservation_commutators(n_max):
    basis = fock.FockBasis(n_max)
    na, nb = fock.number_operators(basis)
    Hs = fock.build_stokes_hamiltonian(StokesParams(11.0, 10.0, 1.0), n_max)
    Ha = fock.build_antistokes_hamiltonian(AntiStokesParams(11.0, 10.0, 0.5 + 0.5j), n_max)
    assert fock.commutator_norm(Hs, na - nb) == 0
    assert fock.commutator_norm(Ha, na + nb) == 0
    assert Hs.hermiticity_error() < 1e-12
    assert Ha.hermiticity_error() < 1e-12


def test_uncoupled_antistokes_is_diagonal():
    H = fock.build_antistokes_hamiltonian(AntiStokesParams(12.0, 10.0, 0.0), 2)
    assert np.count_nonzero(H.matrix - np.diag(np.diag(H.matrix))) == 0


def test_resonant_single_excitation_block():
    H = fock.build_antistokes_hamiltonian(AntiStokesParams(10.0, 10.0, 1.0), 2)
    idx = [H.basis.index(1, 0), H.basis.index(0, 1)]
    w = fock.eigenvalues(fock.FockOperator(H.basis, H.matrix[np.ix_(idx, idx)]))
    assert np.allclose(w, [9.0, 11.0], atol=1e-14)


def test_antistokes_low_spectrum_is_polariton_lattice():
    p = AntiStokesParams(12.5, 10.0, 0.7 - 0.2j)
    d = diagonalize_antistokes(p)
    H = fock.build_antistokes_hamiltonian(p, 4)
    low = np.flatnonzero(H.basis.photon_numbers + H.basis.phonon_numbers <= 2)
    w = fock.eigenvalues(fock.FockOperator(H.basis, H.matrix[np.ix_(low, low)]))
    lattice = sorted(a * d.Omega_plus + b * d.Omega_minus for a in range(3) for b in range(3) if a + b <= 2)
    assert np.allclose(w, lattice, atol=1e-12)


def test_eigenvalues_reject_non_hermitian():
    basis = fock.FockBasis(1)
    M = np.zeros((4, 4), dtype=complex)
    M[0, 1] = 1.0
    with pytest.raises(ValueError):
        fock.eigenvalues(fock.FockOperator(basis, M))


def test_eigenvalues_sorted_diagonal():
    basis = fock.FockBasis(1)
    op = fock.FockOperator(basis, np.diag([3.0, -1.0, 2.0, 0.5]).astype(complex))
    assert list(fock.eigenvalues(op)) == [-1.0, 0.5, 2.0, 3.0]


def test_stokes_ground_eigenvalue():
    p = StokesParams(10.0, 10.0, 1.0)
    E0 = fock.eigenvalues(fock.build_stokes_hamiltonian(p, 30))[0]
    assert E0 == pytest.approx(-0.05012563, abs=1e-6)
    assert E0 == pytest.approx(diagonalize_stokes(p).omega_0, rel=1e-9)


def test_stokes_ground_state_is_parity_image_of_squeezed_state():
    p = StokesParams(10.0, 10.0, 1.0)
    r = diagonalize_stokes(p).r
    _, g = fock.ground_state(fock.build_stokes_hamiltonian(p, 30))
    c = squeezed_amplitudes(r, 30).amplitudes
    diag = np.array([g.amplitude(n, n) for n in range(31)])
    assert np.allclose(diag, (-1.0) ** np.arange(31) * c, atol=1e-10)


def test_truncation_convergence():
    # tanh r = 0.5: truncation error is resolvable at n_max = 10 and 20
    p = StokesParams(10.0, 10.0, 8.0)
    w0 = diagonalize_stokes(p).omega_0
    errs = [abs(fock.eigenvalues(fock.build_stokes_hamiltonian(p, n))[0] - w0) for n in (10, 20, 30)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-12


@pytest.mark.parametrize("f", [1.0, 0.5, 0.1])
def test_truncation_error_at_machine_floor_for_weak_squeezing(f):
    p = StokesParams(10.0, 10.0, f)
    w0 = diagonalize_stokes(p).omega_0
    for n in (10, 20, 30):
        assert abs(fock.eigenvalues(fock.build_stokes_hamiltonian(p, n))[0] - w0) < 1e-12


def test_squeeze_identity_at_zero():
    S = fock.build_squeeze_operator(0.0, 4)
    assert np.allclose(S.matrix, np.eye(25))
    assert np.allclose(fock.build_squeeze_operator(0.0, 4, "factored").matrix, np.eye(25))


def test_squeeze_methods_agree_on_interior():
    S1 = fock.build_squeeze_operator(0.05, 12, "exponential")
    S2 = fock.build_squeeze_operator(0.05, 12, "factored")
    idx = S1.basis.interior(6)
    assert np.linalg.norm((S1.matrix - S2.matrix)[np.ix_(idx, idx)], 2) < 1e-8
    out = S1 @ fock.FockState.vacuum(S1.basis)
    c = squeezed_amplitudes(0.05, 6).amplitudes
    assert np.allclose([out.amplitude(n, n) for n in range(7)], c, atol=1e-10)


def test_squeeze_transforms_ladder_operators():
    # S^dag a S = cosh r a + sinh r b^dag on the interior
    r = 0.2
    S = fock.build_squeeze_operator(r, 40).matrix
    a, b = fock.ladder_operators(fock.FockBasis(40))
    lhs = S.conj().T @ a @ S
    rhs = math.cosh(r) * a + math.sinh(r) * b.T
    idx = fock.FockBasis(40).interior(10)
    assert np.allclose(lhs[np.ix_(idx, idx)], rhs[np.ix_(idx, idx)], atol=1e-10)


def test_squeeze_rejects_small_truncation():
    with pytest.raises(ValueError):
        fock.build_squeeze_operator(1.0, 5)
    with pytest.raises(ValueError):
        fock.build_squeeze_operator(0.05, 12, "bogus")


def test_squeeze_interior_unitarity():
    S = fock.build_squeeze_operator(0.3, 40)
    idx = S.basis.interior()
    cols = np.linalg.norm(S.matrix[:, idx], axis=0)
    assert np.allclose(cols, 1.0, atol=1e-8)


def test_evolution_identity_and_norm():
    p = AntiStokesParams(11.0, 10.0, 1.0)
    H = fock.build_antistokes_hamiltonian(p, 4)
    psi0 = fock.FockState.number_state(H.basis, 2, 1)
    assert np.allclose(fock.evolve_state(H, psi0, 0.0).amplitudes, psi0.amplitudes)
    for s in fock.evolve_state(H, psi0, np.linspace(0, 100, 21)):
        assert s.norm() == pytest.approx(1.0, abs=1e-10)


def test_evolution_resonant_transfer():
    H = fock.build_antistokes_hamiltonian(AntiStokesParams(10.0, 10.0, 1.0), 3)
    psi = fock.evolve_state(H, fock.FockState.number_state(H.basis, 1, 0), math.pi / 2)
    assert abs(psi.amplitude(0, 1)) ** 2 == pytest.approx(1.0, abs=1e-10)


def test_stokes_evolution_conserves_number_difference():
    H = fock.build_stokes_hamiltonian(StokesParams(10.5, 10.0, 1.0), 20)
    for s in fock.evolve_state(H, fock.FockState.vacuum(H.basis), np.linspace(0, 30, 16)):
        n = fock.number_expectations(s)
        assert n["n_phot"] - n["n_phon"] == pytest.approx(0.0, abs=1e-12)


def test_number_expectations():
    basis = fock.FockBasis(3)
    assert fock.number_expectations(fock.FockState.vacuum(basis)) == {"n_phot": 0.0, "n_phon": 0.0}
    assert fock.number_expectations(fock.FockState.number_state(basis, 2, 1)) == {"n_phot": 2.0, "n_phon": 1.0}


def test_number_expectations_of_squeezed_state():
    r = diagonalize_stokes(StokesParams(10, 10, 1)).r
    S = fock.build_squeeze_operator(r, 20)
    n = fock.number_expectations(S @ fock.FockState.vacuum(S.basis))
    assert n["n_phot"] == pytest.approx(0.00251891, abs=1e-8)
    assert n["n_phon"] == pytest.approx(math.sinh(r) ** 2, abs=1e-12)


def test_entropy_of_product_and_bell_states():
    basis = fock.FockBasis(2)
    assert fock.entanglement_entropy(fock.FockState.number_state(basis, 1, 2)) == pytest.approx(0.0, abs=1e-14)
    amps = np.zeros(basis.dim, dtype=complex)
    amps[basis.index(1, 0)] = amps[basis.index(0, 1)] = 1 / math.sqrt(2)
    assert fock.entanglement_entropy(fock.FockState(basis, amps)) == pytest.approx(math.log(2))


def test_dump_and_load_roundtrip(tmp_path):
    H = fock.build_antistokes_hamiltonian(AntiStokesParams(11.0, 10.0, 0.3 + 0.4j), 2)
    psi = fock.evolve_state(H, fock.FockState.number_state(H.basis, 1, 0), 0.7)
    fock.dump_state(psi, tmp_path / "psi.txt")
    fock.dump_operator(H, tmp_path / "H.txt")
    lines = (tmp_path / "psi.txt").read_text().splitlines()
    assert lines[0].startswith("# fock-state n_max=2")
    assert len(lines) == 1 + 9
    assert lines[1].split()[0] == "0"
    assert np.array_equal(fock.load_state(tmp_path / "psi.txt").amplitudes, psi.amplitudes)
    assert np.array_equal(fock.load_operator(tmp_path / "H.txt").matrix, H.matrix)
