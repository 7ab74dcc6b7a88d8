# Brute-force check of the closed forms on a truncated two-mode Fock space.
#
# Everything here is plain matrix algebra: ladder operators, eigh, and
# spectral time evolution.

import numpy as np

from sbs_entangle import fock
from sbs_entangle.stokes import StokesParams, diagonalize_stokes
from sbs_entangle.verify import run_checks

p = StokesParams(10.0, 10.0, 1.0)
H = fock.build_stokes_hamiltonian(p, 30)
E0, ground = fock.ground_state(H)
print(f"numerical ground energy {E0:.12f} vs closed form {diagonalize_stokes(p).omega_0:.12f}")

# The ground state only populates |n, n>: photons and phonons come in pairs.
grid = ground.as_grid()
print("diagonal amplitudes:", np.array2string(np.diag(grid)[:4].real, precision=6))
print("largest off-pair amplitude:", np.abs(grid - np.diag(np.diag(grid))).max())

# The sign alternation is the local phonon parity: the Hamiltonian's ground
# state is S(-r)|0,0>, equivalent to S(r)|0,0> up to b -> -b.
print(f"entanglement entropy {fock.entanglement_entropy(ground):.8f} nats")

# Squeeze operator two ways: direct exponential and normal-ordered product.
S1 = fock.build_squeeze_operator(0.05, 12, "exponential")
S2 = fock.build_squeeze_operator(0.05, 12, "factored")
idx = S1.basis.interior()
print("exp vs factored on interior:", np.linalg.norm((S1.matrix - S2.matrix)[np.ix_(idx, idx)], 2))

# Dump a state in the plain-text format (index real imag).
fock.dump_state(ground, "stokes_ground.txt")
print("wrote stokes_ground.txt")

print()
for check in run_checks(10.0, 10.0, 1.0, 1.0, n_max=30):
    print(check.line())
