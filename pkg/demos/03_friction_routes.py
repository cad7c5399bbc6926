"""Four independent constructions of the friction operator.

energy_basis  closed formula p_lj tanh(D)/D in the energy basis
lyapunov      solve of the stationarity equation Theta B + B Theta = i gamma [x, B]
quadrature    log-coth kernel integral, evaluated adaptively
series        nested-commutator expansion with Bernoulli coefficients

All four agree on the oscillator; the series route diverges for the well
at T = 1 (level gaps far beyond pi kB T) and says so.
"""

import warnings

import numpy as np

import qsthermo as qt
from qsthermo import friction
from qsthermo.errors import SeriesDivergenceWarning

model = qt.build_oscillator(16)
bath = qt.BathParams(temperature=1.0, beta=0.3, alpha=0.5)

routes = {
    "energy_basis": friction.theta_energy_basis(model, bath),
    "lyapunov": friction.theta_lyapunov(model, bath),
    "quadrature": friction.theta_quadrature(model, bath),
    "series(6)": friction.theta_series(model, bath, 6),
}
print("oscillator: theta is p times", np.tanh(0.5) / 0.5)
ref = routes["energy_basis"]
for name, theta in routes.items():
    print(f"  {name:<13} max |dev from energy_basis| = {np.abs(theta - ref).max():.3e}")

print("\nhigh-temperature limit: theta -> p")
for temp in (1.0, 5.0, 25.0, 1e4):
    hot = qt.BathParams(temperature=temp, beta=0.3, alpha=0.5)
    theta = friction.theta_energy_basis(model, hot)
    print(f"  T = {temp:>8g}: max |theta - p| = {np.abs(theta - model.p).max():.3e}")

print("\nwell at T = 1: the commutator series is outside its convergence radius")
well = qt.build_well(15, mass=3.0, length=2.0)
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always", SeriesDivergenceWarning)
    friction.theta_series(well, bath, 4)
for w in caught:
    print(f"  warning: {w.message}")
print("  the lyapunov and quadrature routes still agree:",
      f"{np.abs(friction.theta_lyapunov(well, bath) - friction.theta_quadrature(well, bath)).max():.3e}")
