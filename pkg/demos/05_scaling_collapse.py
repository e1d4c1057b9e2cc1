"""
Scaling collapse
================

eta is proportional to omega_c^-3 and to n^2 (alpha grows with n). The
cavity equations depend on intensities only through eta |E|^2, so rescaling
the intensities makes the curves for different couplings or densities lie
on top of each other.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ring_ob import CavityConfig, MediumParams, eta_closed_form, scaling_collapse, trace_curve

base = MediumParams(omega_c=2.0, delta_p=5.0, c6=2e4, density=0.24, alpha=70.0)
cavity = CavityConfig(t_mirror=0.5)

couplings = [2.0, 3.0, 4.0, 5.0]
eps = [oc / couplings[0] for oc in couplings]
curves = [trace_curve(eta_closed_form(base.evolve(omega_c=oc)), cavity) for oc in couplings]
print(f"coupling collapse deviation: {scaling_collapse(curves, eps, 3.0, 'omega_c'):.2e}")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
for oc, e, c in zip(couplings, eps, curves):
    ax1.plot(c.i_in, c.i_out, label=f"omega_c = {oc:g}")
    ax2.plot(c.i_in * e**-3, c.i_out * e**-3)
ax1.set_xlim(0, 3)
ax2.set_xlim(0, 0.1)
ax1.set_title("raw")
ax2.set_title("intensities times eps^-3")
ax1.legend(frameon=False)
fig.tight_layout()
fig.savefig("05_scaling_collapse.png", dpi=120)

# density: alpha follows n, so eta goes as eps^2
ratios = [1.0, 0.75, 0.5, 0.25]
dense = [trace_curve(eta_closed_form(base.evolve(density=r * base.density, alpha=r * base.alpha)),
                     cavity) for r in ratios]
print(f"density collapse deviation:  {scaling_collapse(dense, ratios, 2.0, 'density'):.2e}")
