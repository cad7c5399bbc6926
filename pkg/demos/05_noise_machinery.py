"""The stochastic machinery behind the noise terms.

1. A multiplicative-noise linear SDE has an averaged solution obeying
   a closed ODE with the alpha-dependent drift correction; Monte-Carlo
   trajectories confirm it.
2. Averaging the noisy Schroedinger equation destroys the norm of the
   averaged wave function (except for alpha = 0), which is why the
   density-matrix description is unavoidable.
3. The Lyapunov solver behind the friction-operator construction, with
   its eigenvalue solvability criterion and integral-form cross-check.
"""

import numpy as np

import qsthermo as qt
from qsthermo import gbm
from qsthermo.models import hamiltonian

print("scalar benchmark: dy/dt = y n(t), alpha = 1/2 -> E{y}(1) = e")
sys_ = gbm.GBMSystem(drift=np.zeros((1, 1)), noise=(np.ones((1, 1)),), alpha=0.5)
exact = gbm.mean_ode_solution(sys_, [1.0], 1.0)[0].real
stats = gbm.simulate_trajectories(sys_, [1.0], dt=1e-3, steps=1000, n_traj=10_000, seed=42)
mc, sigma = stats.mean[-1, 0].real, stats.stderr[-1, 0]
print(f"  ODE: {exact:.6f}   MC: {mc:.6f} +- {sigma:.6f}   z = {(mc - exact) / sigma:+.2f}")

print("\nnorm of the averaged wave function under position noise")
model = qt.build_oscillator(16)
noise_op = -np.sqrt(0.3) * model.x  # -sqrt(D m) x at D = kB T beta / (2 alpha)
psi0 = np.zeros(16, dtype=complex)
psi0[0] = psi0[1] = 1 / np.sqrt(2)
for alpha in (0.0, 0.5, 1.0):
    out = gbm.norm_decay_demo(hamiltonian(model), [noise_op], alpha, psi0,
                              np.linspace(0.0, 5.0, 6))
    values = "  ".join(f"{v:.4f}" for v in out.norms_squared)
    print(f"  alpha = {alpha:.1f}:  |E{{psi}}|^2 = {values}")

print("\nLyapunov equation A X + X A = C")
rng = np.random.default_rng(1)
a = rng.standard_normal((5, 5))
a -= (np.abs(np.linalg.eigvals(a).real).max() + 1.0) * np.eye(5)
c = rng.standard_normal((5, 5))
x = gbm.lyapunov_solve(a, c)
print(f"  residual |A X + X A - C| = {np.abs(a @ x + x @ a - c).max():.3e}")
print(f"  integral-form agreement  = {np.abs(x - gbm.lyapunov_integral(a, c)).max():.3e}")
try:
    gbm.lyapunov_solve(np.diag([1.0, -1.0]), np.eye(2))
except Exception as exc:
    print(f"  resonant spectrum rejected: {exc}")
