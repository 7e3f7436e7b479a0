"""Spin-flip probabilities through a rectangular pulse, with decay.

Plots W- (spin initially against the effective field), W+ and their
difference Delta W as functions of the pulse duration at x = 3/4, then
overlays Monte-Carlo estimates of W- sampled trial by trial from the
emission / no-emission scenario decomposition.

The decay here is a phenomenological spin lifetime chosen ridiculously
short (omega0 tau_s = 16) so fringes and saturation fit in one picture;
the applicability check duly objects, and its verdict is printed.

Run:  python3 demos/03_pulse_anisotropy.py
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from spinfloquet import (DecayModel, applicability_check, decay_rate,
                         flip_result, monte_carlo_flip,
                         photon_energy_to_omega, solve_floquet)
from spinfloquet.floquet import DriveField
from spinfloquet.pulse import PulseSpec
from spinfloquet.units import CONSTANTS

omega0 = photon_energy_to_omega(1.0)
h0 = 0.75 * CONSTANTS.hbar_erg_s * omega0 / (2.0 * CONSTANTS.mu_B_erg_per_gauss)
field = DriveField(h0_gauss=h0, omega0=omega0)
sol = solve_floquet(field)

tau_s = 16.0 / omega0
model = DecayModel.phenomenological(tau_s)
verdict = applicability_check(omega0, tau_s)
print(f"applicability: omega0 * tau_s = {verdict.product:g} "
      f"(threshold {verdict.threshold:g}) -> {verdict.verdict}")

# closed-form curves over ~8 Rabi periods
taus = np.linspace(1e-3, 50.0, 1200) / omega0
results = [flip_result(PulseSpec(field=field, tau0=float(t)),
                       decay_rate(sol, model)) for t in taus]
w_minus = np.array([r.W_minus for r in results])
w_plus = np.array([r.W_plus for r in results])
delta_w = np.array([r.Delta_W for r in results])

# Monte-Carlo overlay: 20000 scenario-sampled trials per point
mc_taus = np.linspace(2.0, 48.0, 9) / omega0
mc = [monte_carlo_flip(PulseSpec(field=field, tau0=float(t)),
                       decay_rate(sol, model), "minus",
                       n_trials=20000, seed=7000 + i)
      for i, t in enumerate(mc_taus)]

print("\nMonte-Carlo vs closed form (W-):")
for t, est in zip(mc_taus, mc):
    exact = flip_result(PulseSpec(field=field, tau0=float(t)),
                        decay_rate(sol, model)).W_minus
    pull = (est.estimate - exact) / est.std_error
    print(f"  omega0 tau0 = {t * omega0:5.1f}: closed {exact:.4f}  "
          f"MC {est.estimate:.4f} +- {est.std_error:.4f}  ({pull:+.2f} sigma)")

fig, ax = plt.subplots(figsize=(7.5, 4.5))
ax.plot(taus * omega0, w_minus, "C0-", label=r"$W_-$")
ax.plot(taus * omega0, w_plus, "C1-", label=r"$W_+$")
ax.plot(taus * omega0, delta_w, "C2-", label=r"$\Delta W$")
ax.errorbar(mc_taus * omega0, [e.estimate for e in mc],
            yerr=[2.0 * e.std_error for e in mc], fmt="ko", ms=4,
            capsize=3, label=r"Monte-Carlo $W_-$ ($\pm 2\sigma$)")
ax.set_xlabel(r"$\omega_0 \tau_0$")
ax.set_ylabel("flip probability")
ax.set_title(r"Rectangular pulse at $x = 3/4$, $\omega_0\tau_s = 16$")
ax.legend()
fig.tight_layout()
fig.savefig("pulse_anisotropy.png", dpi=150)
print("\nwrote pulse_anisotropy.png")
