"""
Transmission peaks and hysteresis loops
=======================================

Each transmission peak marks a nonlinear phase that closes a cavity
resonance. Absorption makes successive peaks lower and closer together.
Sweeping the input slowly up and back down traces hysteresis loops whose
jumps sit on the folds.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ring_ob import CavityConfig, MediumParams, eta_closed_form, hysteresis
from ring_ob import trace_curve, transmission_profile

medium = MediumParams(omega_c=3.0, delta_p=5.0, c6=2e4, density=0.24, alpha=70.0)
eta = eta_closed_form(medium)
cavity = CavityConfig(t_mirror=0.5)

prof = transmission_profile(eta, cavity, n_samples=8001)
for pos, height in zip(prof.peak_positions, prof.peak_heights):
    print(f"peak at I_t = {pos:.5f}, transmission {height:.4f}")

curve = trace_curve(eta, cavity)
trace = hysteresis(curve, i_i_max=0.6, n_steps=600)
for jump in trace.jumps:
    print(f"{jump.direction:>4} jump at I_i = {jump.i_in:.5f}: "
          f"{jump.i_out_before:.5f} -> {jump.i_out_after:.5f}")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(prof.i_out, prof.transmission)
ax1.plot(prof.peak_positions, prof.peak_heights, "o")
ax1.set_xlabel("output intensity")
ax1.set_ylabel("transmission")
# a dense trace of the low-intensity part, for drawing only
detail = trace_curve(eta, cavity, x_max=2.0, n_samples=4001)
ax2.plot(detail.i_in, detail.i_out, color="0.8", label="steady states")
ax2.plot(*trace.upward.T, label="sweep up")
ax2.plot(*trace.downward.T, "--", label="sweep down")
ax2.set_xlim(0, 0.6)
ax2.set_ylim(0, 0.03)
ax2.set_xlabel("input intensity")
ax2.set_ylabel("output intensity")
ax2.legend(frameon=False)
fig.tight_layout()
fig.savefig("04_transmission_and_hysteresis.png", dpi=120)
