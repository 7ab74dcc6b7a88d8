# Phase matching for the Stokes and anti-Stokes processes.
#
# Pump on branch 2, scattered photon on branch 1, dispersionless phonon.
# Energy and momentum conservation fix the phonon wavenumber for each
# process; the two phonons share a frequency but not a wavenumber.

from sbs_entangle import (
    BranchDispersion,
    PhononBranch,
    PumpDrive,
    solve_antistokes_matching,
    solve_stokes_matching,
)

branches = BranchDispersion(omega10=200.0, omega20=100.0, v_g=1.0)
phonon = PhononBranch(Omega=10.0)
pump = PumpDrive(n_p_in=1e12, u=1e6, k_p=900.0)

stokes = solve_stokes_matching(branches, phonon, pump)
anti = solve_antistokes_matching(branches, phonon, pump)

for kin in (stokes, anti):
    direction = "with" if kin.copropagating else "against"
    print(
        f"{kin.process.value:12s} omega={kin.omega_scattered:7.1f}  k={kin.k_scattered:6.1f}  "
        f"q={kin.q_phonon:6.1f}  (phonon runs {direction} the pump)"
    )

# The two phonon wavenumbers differ by 2 Omega / v_g, which is what lets
# the two processes be addressed separately.
print("q_s - q_as =", stokes.q_phonon - anti.q_phonon, " 2 Omega / v_g =", 2 * phonon.Omega / branches.v_g)
