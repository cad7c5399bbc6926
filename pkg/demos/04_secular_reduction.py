"""Secular reduction: golden-rule rates, detailed balance, Schnakenberg.

The four-index tensors rebuild the full relaxation superoperator exactly;
dropping the population-coherence coupling leaves a Pauli master equation
whose jump rates obey detailed balance, so the populations relax to the
Boltzmann weights and the Schnakenberg form reproduces the entropy
production of the full model once the transient coherences are gone.
"""

import math

import numpy as np

import qsthermo as qt
import qsthermo.secular as sec
from qsthermo import friction

model = qt.build_oscillator(16)
bath = qt.BathParams(temperature=1.0, beta=0.3, alpha=0.5)
theta = friction.theta_energy_basis(model, bath)
liouv = qt.assemble(model, bath, theta)

gamma_plus, gamma_minus = sec.gamma_tensors(model, bath)
rebuilt = sec.relaxation_tensor(gamma_plus, gamma_minus)
dev = np.abs(rebuilt - liouv.relaxation.reshape(16, 16, 16, 16)).max()
print(f"relaxation tensor rebuilt from the gamma tensors: max dev {dev:.3e}")

w = sec.pauli_rates(model, bath)
print(f"golden-rule rate W[0,1] = {w[0, 1]:.7f}, W[0,1]/W[1,0] = {w[0, 1] / w[1, 0]:.7f} (= e)")
boltz = np.exp(-model.energies)
print("detailed balance residual:",
      f"{np.abs(w * boltz[None, :] - w.T * boltz[:, None]).max():.3e}")

# population-transfer rates of the full superoperator (Gamma+ + Gamma-)
w_full = np.einsum("inni->ni", gamma_plus + gamma_minus).real.copy()
np.fill_diagonal(w_full, 0.0)

dt = math.pi / 200
p0 = np.zeros(16)
p0[0] = 1.0
pops = sec.pauli_evolve(p0, w_full, dt, 1000)
schnak = sum(sec.schnakenberg(np.maximum(pops[k], 1e-300), w_full)
             for k in range(1, 1001)) * dt

observer = qt.ThermoObserver(model, bath, liouv, theta)
rho0 = np.zeros((16, 16), dtype=complex)
rho0[0, 0] = 1.0
res = qt.evolve(rho0, qt.propagator(liouv, dt), qt.EvolutionConfig(dt=dt, steps=1000),
                observer)
full = sum(r.entropy_production_rate for r in res.records[1:]) * dt
print(f"\nentropy produced relaxing |0><0| to equilibrium over t = {1000 * dt:.1f}:")
print(f"  full model      {full:.6f}")
print(f"  Pauli/Schnakenberg {schnak:.6f}   (rel dev {abs(schnak - full) / full:.2e})")

rates = sec.decoherence_rates(model, bath)
print(f"\ncoherence decay rates gamma[0,1] = {rates[0, 1]:.4f}, "
      f"gamma[0,5] = {rates[0, 5]:.4f} (larger gaps decohere faster)")
