"""
Propagation through the Kerr medium
===================================

The field equation dE/dzeta = i eta |E|^2 E has a closed-form solution. We
compare it with a fixed-step Runge-Kutta integration and watch the error
fall by 2^4 per step doubling.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ring_ob import NonlinearCoefficient, propagate_analytic, propagate_numeric

eta = NonlinearCoefficient(-1.5, 0.6)
e0 = 0.7

zeta = np.linspace(0, 1, 200)
res = propagate_analytic(eta, e0, zeta)

# intensity decays as 1 / (1 + 2b|E0|^2 zeta) while the phase winds up
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
ax1.plot(zeta, np.abs(res.e_out) ** 2)
ax1.set_xlabel("zeta")
ax1.set_ylabel("|E|^2")
ax2.plot(zeta, res.phase_shift)
ax2.set_xlabel("zeta")
ax2.set_ylabel("nonlinear phase (rad)")
fig.tight_layout()
fig.savefig("02_propagation.png", dpi=120)

exact = propagate_analytic(eta, e0).e_out
steps = 2 ** np.arange(4, 11)
errors = [abs(propagate_numeric(eta, e0, steps=int(n)) - exact) for n in steps]
for n, err, nxt in zip(steps, errors, errors[1:] + [np.nan]):
    print(f"{n:5d} steps  error {err:.3e}  ratio {err / nxt:6.2f}")
