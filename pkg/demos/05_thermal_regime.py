# Operating conditions: thermal phonons and the strong-coupling regime.

import numpy as np

from sbs_entangle import EnvironmentParams, regime_check, thermal_occupation
from sbs_entangle.environment import crossover_temperature

nu = 10e9  # Hz

for T in (300.0, 4.0, 1.0, 0.1, 0.01):
    print(f"T = {T:7.3f} K   n_thermal = {thermal_occupation(nu, T):.3e}")
print(f"one thermal phonon at T = {crossover_temperature(nu):.4f} K")

# The pump lifts the coupling from 1 MHz to 1 GHz, far above the 1 MHz
# phonon damping; the bare coupling is only marginal.
env = EnvironmentParams(temperature=0.01, phonon_freq=nu, Gamma=1e6, gamma_photon=1e5)
for f in (1e6, 1e9):
    rep = regime_check(f, env)
    print(
        f"f = {f:.0e} Hz: f/Gamma = {rep.coupling_to_phonon_damping:g}, strong = {rep.strong_coupling}, "
        f"thermal negligible = {rep.thermal_negligible}"
    )

T = np.geomspace(1e-3, 300, 7)
print(np.column_stack([T, thermal_occupation(nu, T)]))
