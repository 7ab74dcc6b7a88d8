# Anti-Stokes process: photon-phonon polaritons and Rabi oscillations.

import math

import numpy as np

from sbs_entangle import (
    AntiStokesParams,
    apply_collective_creation,
    diagonalize_antistokes,
    photon_population_dynamics,
)

Omega, f = 10.0, 1.0

# At resonance the two polaritons split by 2f and are half photon, half phonon.
d = diagonalize_antistokes(AntiStokesParams(Omega, Omega, f))
print(f"Omega_+ = {d.Omega_plus}, Omega_- = {d.Omega_minus}")
for sign in "+-":
    state = apply_collective_creation(sign, (0, 0), d)
    terms = " ".join(f"{c.real:+.4f}|{n},{m}>" for (n, m), c in state.items())
    print(f"A_{sign}^dag |0,0> = {terms}")

# Away from resonance each branch drifts toward one of the bare modes.
for delta in (-5.0, -1.0, 0.0, 1.0, 5.0):
    d = diagonalize_antistokes(AntiStokesParams.from_detuning(delta, Omega, f))
    print(
        f"delta_as = {delta:+.1f}: upper |X|^2={d.x_plus_sq:.3f} |Y|^2={d.y_plus_sq:.3f}  "
        f"lower |X|^2={d.x_minus_sq:.3f} |Y|^2={d.y_minus_sq:.3f}"
    )

# A photon injected at resonance turns fully into a phonon after pi/(2f) ns
# (GHz read as rad/ns). Detuning caps the transfer at |f|^2 / Delta^2.
t = np.linspace(0, 2 * math.pi, 9)
for delta in (0.0, 1.0):
    P = photon_population_dynamics(AntiStokesParams.from_detuning(delta, Omega, f), t)
    print(f"delta_as = {delta}: P_phot(t) =", np.array2string(P, precision=3))
