# Stokes process: Bogoliubov modes and the two-mode squeezed photon-phonon state.

import numpy as np

from sbs_entangle import (
    StokesParams,
    bell_approximation,
    diagonalize_stokes,
    squeezed_amplitudes,
    squeezed_statistics,
)
from sbs_entangle.config import ScenarioConfig

# Effective coupling from the default scenario: g = 1 MHz, u = 1 MHz,
# 1e12 pump photons per second -> f = 1 GHz.
cfg = ScenarioConfig()
f = cfg.f_s_ghz()
Omega = cfg.omega_phonon_ghz
print(f"f_s = {f} GHz, Omega = {Omega} GHz")

d = diagonalize_stokes(StokesParams(Omega, Omega, f))
print(f"at delta_s = 0: omega_alpha = omega_beta = {d.omega_alpha:.8f}, omega_0 = {d.omega_0:.8f}")
print(f"cosh^2 r = {d.cosh2:.8f}, sinh^2 r = {d.sinh2:.8f}, r = {d.r:.7f}")

# Pair amplitudes fall off geometrically with ratio tanh r.
c = squeezed_amplitudes(d.r, 4).amplitudes
print("pair amplitudes c_n:", np.array2string(c, precision=6))
stats = squeezed_statistics(d.r)
print(f"mean pairs {stats['mean_pairs']:.6f}, entanglement entropy {stats['entanglement_entropy']:.6f} nats")

# For small r the state is close to the two-term Bell-type state |00> + r|11>.
for r in (0.01, 0.05, 0.1, 0.3):
    print(f"r = {r:<5} two-term fidelity {bell_approximation(r)['fidelity_vs_full']:.6f}")

# Sweep the detuning. omega_alpha follows the photon line, omega_beta stays
# near the phonon frequency, and the fractions hug 1 and 0.
deltas = np.linspace(-5, 5, 201)
rows = [diagonalize_stokes(StokesParams.from_detuning(x, Omega, f)) for x in deltas]
wa = np.array([x.omega_alpha for x in rows])
wb = np.array([x.omega_beta for x in rows])
s2 = np.array([x.sinh2 for x in rows])
print(f"omega_beta spans [{wb.min():.4f}, {wb.max():.4f}] GHz; sinh^2 r max {s2.max():.5f} at delta_s = {deltas[s2.argmax()]}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax1.plot(deltas, wa, label=r"$\omega_\alpha$")
    ax1.plot(deltas, wb, label=r"$\omega_\beta$")
    ax1.plot(deltas, [x.omega_0 for x in rows], label=r"$\omega_0$")
    ax1.set_xlabel(r"$\delta_s$ (GHz)")
    ax1.legend()
    ax2.plot(deltas, s2)
    ax2.set_xlabel(r"$\delta_s$ (GHz)")
    ax2.set_ylabel(r"$\sinh^2 r$")
    fig.tight_layout()
    fig.savefig("stokes_sweep.png", dpi=120)
    print("wrote stokes_sweep.png")
