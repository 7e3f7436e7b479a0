"""Dressed-state spectrum of a spin-1/2 in a circularly polarized field.

Sweeps the dimensionless drive strength x = 2 mu_B H0 / (hbar omega0) at a
fixed 1 eV photon energy, plots the quasienergies and the dressed splitting
for both helicities, and spot-checks that the analytic states really solve
the time-dependent Schrodinger equation.

Run:  python3 demos/01_dressed_spectrum.py
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from spinfloquet import photon_energy_to_omega, schrodinger_residual, solve_floquet
from spinfloquet.floquet import DriveField
from spinfloquet.units import CONSTANTS

PHOTON_EV = 1.0
omega0 = photon_energy_to_omega(PHOTON_EV)


def field_for_x(x, helicity=1):
    # invert x = 2 mu_B H0 / (hbar omega0) for the amplitude in gauss
    h0 = x * CONSTANTS.hbar_erg_s * omega0 / (2.0 * CONSTANTS.mu_B_erg_per_gauss)
    return DriveField(h0_gauss=h0, omega0=omega0, helicity=helicity)


# --- quasienergies vs drive strength, both rotation senses ---------------

xs = np.linspace(0.0, 3.0, 301)
curves = {}
for hel in (1, -1):
    sols = [solve_floquet(field_for_x(x, hel)) for x in xs]
    curves[hel] = {
        "eps_g": np.array([s.eps_g for s in sols]),
        "eps_e": np.array([s.eps_e for s in sols]),
        "split": np.array([s.Omega0 for s in sols]) * CONSTANTS.hbar_eV_s,
    }

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
for hel, style in ((1, "-"), (-1, "--")):
    label = "co-rotating" if hel == 1 else "counter-rotating"
    ax1.plot(xs, curves[hel]["eps_g"], "C0" + style, label=f"ground, {label}")
    ax1.plot(xs, curves[hel]["eps_e"], "C3" + style, label=f"excited, {label}")
    ax2.plot(xs, curves[hel]["split"], "C2" + style, label=label)
ax1.set_xlabel(r"$x = 2\mu_B H_0 / \hbar\omega_0$")
ax1.set_ylabel("quasienergy (eV)")
ax1.legend(fontsize=8)
ax2.set_xlabel(r"$x = 2\mu_B H_0 / \hbar\omega_0$")
ax2.set_ylabel(r"dressed splitting $\hbar\Omega_0$ (eV)")
ax2.legend(fontsize=8)
fig.suptitle("Dressed-state spectrum at 1 eV photon energy")
fig.tight_layout()
fig.savefig("dressed_spectrum.png", dpi=150)
print("wrote dressed_spectrum.png")

# --- the reference operating point ----------------------------------------

sol = solve_floquet(field_for_x(0.75))
print(f"\nx = 3/4 at 1 eV (co-rotating):")
print(f"  Omega / omega0  = {sol.Omega / omega0:.6f}   (expected 1.25)")
print(f"  Omega0 / omega0 = {sol.Omega0 / omega0:.6f}   (expected 0.25)")
print(f"  A^2             = {sol.A**2:.6f}   (expected 0.90)")
print(f"  eps_g           = {sol.eps_g:.6f} eV   (expected -0.125)")

# --- honesty check: plug the states back into the Schrodinger equation ----

print("\nmax |i hbar d/dt - H| residual over 200 random times, per state:")
rng = np.random.default_rng(42)
for x in (0.1, 0.75, 2.0):
    s = solve_floquet(field_for_x(x))
    times = rng.uniform(0.0, 50.0 * 2.0 * np.pi / omega0, size=200)
    worst = max(
        float(np.max(schrodinger_residual(s, which, times)))
        for which in ("g", "e")
    )
    print(f"  x = {x:<5}: {worst:.3e}  (relative to hbar Omega)")
