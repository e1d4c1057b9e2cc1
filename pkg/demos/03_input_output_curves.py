"""
Bistable input-output curves
============================

Sweeping the intracavity intensity gives the full S-shaped response,
including the unstable parts between folds. Larger probe detuning adds
more folds; a leakier cavity removes them.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ring_ob import CavityConfig, MediumParams, default_x_max, eta_closed_form, trace_curve

base = MediumParams(omega_c=3.0, delta_p=5.0, c6=2e4, density=0.24, alpha=70.0)
cavity = CavityConfig(t_mirror=0.5)

# one x range for all curves so the fold counts are comparable
x_max = default_x_max(eta_closed_form(base))

fig, ax = plt.subplots(figsize=(6, 4.5))
for dp in (1, 2, 3, 4, 5):
    curve = trace_curve(eta_closed_form(base.evolve(delta_p=dp)), cavity, x_max, 20001)
    print(f"delta_p = {dp}: {len(curve.turning_points)} turning points")
    ax.plot(curve.i_in, curve.i_out, label=f"delta_p = {dp}")
ax.set_xlim(0, 1.5)
ax.set_xlabel("input intensity")
ax.set_ylabel("output intensity")
ax.legend(frameon=False)
fig.tight_layout()
fig.savefig("03_input_output_curves.png", dpi=120)

eta = eta_closed_form(base)
for t in (0.3, 0.5, 0.7, 0.9):
    curve = trace_curve(eta, CavityConfig(t), x_max, 20001)
    print(f"T = {t}: {len(curve.turning_points)} turning points")
