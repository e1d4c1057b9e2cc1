"""
The Kerr coefficient of a blockaded Rydberg gas
===============================================

Blockade turns the van der Waals interaction into an effective cubic
nonlinearity eta = a + ib. Here we look at its size and its phase as the
probe detuning is scanned, and check the closed form against quadrature.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ring_ob import MediumParams, derive_blockade, eta_closed_form
from ring_ob import vdw_integral_closed_form, vdw_integral_numeric

# lengths in micrometres, frequencies in units of gamma2
medium = MediumParams(omega_c=3.0, delta_p=5.0, c6=2e4, density=0.24, alpha=70.0)

blockade = derive_blockade(medium)
print(f"EIT width      {blockade.delta_eit:.3f}")
print(f"blockade R_c   {blockade.r_c:.3f} um")
print(f"atoms / sphere {blockade.n_blockade:.3f}")

eta = eta_closed_form(medium)
print(f"eta = {eta.a:.4f} + {eta.b:.4f}i, theta = {eta.theta:.4f} rad")

# the radial integral behind eta, done both ways
print("quadrature :", vdw_integral_numeric(medium))
print("closed form:", vdw_integral_closed_form(medium))

# phase and size of eta along the detuning axis
dps = np.linspace(-10, 10, 401)
etas = [eta_closed_form(medium.evolve(delta_p=float(d))) for d in dps]

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
ax1.plot(dps, [e.a for e in etas], label="Re eta (dispersive)")
ax1.plot(dps, [e.b for e in etas], label="Im eta (absorptive)")
ax1.set_xlabel("probe detuning (units of gamma2)")
ax1.legend(frameon=False)
ax2.plot(dps, [e.theta / np.pi for e in etas])
ax2.set_xlabel("probe detuning (units of gamma2)")
ax2.set_ylabel("theta / pi")
fig.tight_layout()
fig.savefig("01_nonlinear_coefficient.png", dpi=120)
