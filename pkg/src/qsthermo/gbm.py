"""Multidimensional geometric Brownian motion and supporting linear algebra.

A linear SDE with multiplicative matrix noise,

    dy/dt = (C + sum_j D_j n_j(t)) y,    E{n_i(t) n_j(t')} = 2 delta_ij delta(t-t'),

has an averaged solution obeying the closed ODE

    d E{y}/dt = (C + 2 alpha sum_j D_j^2) E{y},

where alpha in [0, 1] is the stochastic-interpretation parameter (Ito 0,
Stratonovich 1/2, Haenggi-Klimontovich 1).  The Monte-Carlo integrator
maps the chosen interpretation to the equivalent Ito form by adding the
noise-induced drift 2 alpha sum_j D_j^2, so a plain Euler-Maruyama
scheme samples the same process law for every alpha.

Also here: decomplexification of complex linear systems, the Lyapunov
equation solver with its eigenvalue solvability criterion, and the
norm-decay behaviour of the noise-averaged wave function.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, SolverError, SymmetryError
from .matrix_core import expm, is_hermitian, kron, unvectorize, vectorize


@dataclass(frozen=True)
class GBMSystem:
    """Drift generator C, noise generators D_j, interpretation alpha."""

    drift: np.ndarray
    noise: tuple
    alpha: float

    def __post_init__(self):
        c = np.asarray(self.drift)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise DimensionError(f"drift must be square, got shape {c.shape}")
        for d in self.noise:
            if np.asarray(d).shape != c.shape:
                raise DimensionError("all noise generators must match the drift shape")
        if not 0 <= self.alpha <= 1:
            raise DimensionError(f"alpha must lie in [0, 1], got {self.alpha}")


def mean_generator(sys):
    """C + 2 alpha sum_j D_j^2, the generator of the averaged dynamics."""
    gen = np.asarray(sys.drift, dtype=complex).copy()
    for d in sys.noise:
        d = np.asarray(d, dtype=complex)
        gen += 2.0 * sys.alpha * (d @ d)
    return gen


def mean_ode_solution(sys, y0, t):
    """E{y}(t) = expm((C + 2 alpha sum D_j^2) t) y0."""
    y0 = np.asarray(y0, dtype=complex).reshape(-1)
    if y0.size != np.asarray(sys.drift).shape[0]:
        raise DimensionError(
            f"y0 length {y0.size} does not match system dimension"
        )
    if t < 0:
        raise DimensionError(f"t must be >= 0, got {t}")
    return expm(mean_generator(sys) * t) @ y0


@dataclass
class TrajectoryStats:
    """Sample mean and standard error of the mean across trajectories."""

    t: np.ndarray
    mean: np.ndarray
    stderr: np.ndarray
    n_traj: int


def simulate_trajectories(sys, y0, dt, steps, n_traj, seed):
    """Euler-Maruyama sampling of the equivalent Ito SDE.

    The noise-induced drift 2 alpha sum D_j^2 is added to C and the
    Gaussian increments carry variance 2 dt (correlation normalization
    E{n n} = 2 delta).  Each trajectory draws its increments from an
    independent substream keyed by (seed, trajectory index), so results
    are reproducible trajectory-by-trajectory.
    """
    if dt <= 0:
        raise DimensionError(f"dt must be > 0, got {dt}")
    if n_traj < 1:
        raise DimensionError(f"n_traj must be >= 1, got {n_traj}")
    y0 = np.asarray(y0, dtype=complex).reshape(-1)
    n = y0.size
    m = len(sys.noise)
    drift = mean_generator(sys)

    # (n_traj, steps, m) increments, one substream per trajectory
    dw = np.empty((n_traj, steps, m))
    for k in range(n_traj):
        rng = np.random.default_rng((seed, k))
        dw[k] = rng.standard_normal((steps, m)) * np.sqrt(2.0 * dt)

    y = np.broadcast_to(y0, (n_traj, n)).copy()
    mean = np.empty((steps + 1, n), dtype=complex)
    stderr = np.empty((steps + 1, n))
    noise_t = [np.asarray(d, dtype=complex).T for d in sys.noise]
    drift_t = drift.T

    def store(s, y):
        mean[s] = y.mean(axis=0)
        stderr[s] = y.std(axis=0).real / np.sqrt(n_traj)

    store(0, y)
    for s in range(steps):
        dy = (y @ drift_t) * dt
        for j, djt in enumerate(noise_t):
            dy += (y @ djt) * dw[:, s, j][:, None]
        y = y + dy
        store(s + 1, y)
    t = np.arange(steps + 1) * dt
    return TrajectoryStats(t=t, mean=mean, stderr=stderr, n_traj=n_traj)


def decomplexify(a):
    """Real 2n x 2n block embedding [[R, -M], [M, R]] of A = R + iM.

    The spectrum of the embedding is the union of the spectra of A and
    of its conjugate.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"decomplexify needs a square matrix, got {a.shape}")
    r, m = a.real, a.imag
    return np.block([[r, -m], [m, r]])


def lyapunov_solve(a, c):
    """Solve A X + X A = C through the vectorized linear system.

    Unique solvability requires every eigenvalue pair-sum of A to be
    nonzero; the error names the first offending pair.
    """
    a = np.asarray(a, dtype=complex)
    c = np.asarray(c, dtype=complex)
    if a.shape != c.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"incompatible shapes {a.shape} and {c.shape}")
    n = a.shape[0]

    eigvals = np.linalg.eigvals(a)
    sums = eigvals[:, None] + eigvals[None, :]
    scale = max(1.0, float(np.abs(eigvals).max()))
    bad = np.argwhere(np.abs(sums) < 1e-12 * scale)
    if bad.size:
        i, j = bad[0]
        raise SolverError(
            f"eigenvalue pair-sum lambda_{i} + lambda_{j} = "
            f"{eigvals[i]:.6g} + {eigvals[j]:.6g} vanishes; no unique solution"
        )

    eye = np.eye(n)
    system = kron(a, eye) + kron(eye, a.T)
    return unvectorize(np.linalg.solve(system, vectorize(c)), n, n)


def lyapunov_integral(a, c):
    """X = -Int_0^inf exp(A t) C exp(A t) dt, valid for Re(eigenvalues) < 0.

    Evaluated in closed form through the eigendecomposition of A; this is
    the independent cross-check for :func:`lyapunov_solve`.
    """
    a = np.asarray(a, dtype=complex)
    c = np.asarray(c, dtype=complex)
    eigvals, v = np.linalg.eig(a)
    if eigvals.real.max() >= 0:
        raise SolverError(
            f"integral form needs Re(eigenvalues) < 0, got max {eigvals.real.max():.6g}"
        )
    # exp(At) C exp(At) = V exp(Lt) (V^-1 C V) exp(Lt) V^-1, and the time
    # integral of exp((l_i + l_j) t) is -1/(l_i + l_j) elementwise.
    c_tilde = np.linalg.solve(v, c @ v)
    x_tilde = c_tilde / (eigvals[:, None] + eigvals[None, :])
    return v @ x_tilde @ np.linalg.inv(v)


@dataclass
class NormDecayResult:
    t: np.ndarray
    norms_squared: np.ndarray
    rates: np.ndarray
    dissipation_rates: np.ndarray
    max_rate_mismatch: float = field(init=False)

    def __post_init__(self):
        self.max_rate_mismatch = float(np.abs(self.rates - self.dissipation_rates).max())


def norm_decay_demo(h0, a_ops, alpha, psi0, t_grid, hbar=1.0):
    """Norm of the noise-averaged wave function along its evolution.

    Integrates d E{psi}/dt = (1/i hbar) H0 E{psi} - (2 alpha/hbar^2)
    sum_k A_k^2 E{psi} and returns the squared-norm series together with
    the instantaneous rate 2 Re <psi, d psi/dt> and its closed form
    -(4 alpha/hbar^2) sum_k ||A_k psi||^2.  The two agree identically;
    the norm is conserved only for alpha = 0 or vanishing noise.
    """
    if not is_hermitian(np.asarray(h0, dtype=complex)):
        raise SymmetryError("h0 must be Hermitian")
    for ak in a_ops:
        if not is_hermitian(np.asarray(ak, dtype=complex)):
            raise SymmetryError("every noise operator must be Hermitian")

    h0 = np.asarray(h0, dtype=complex)
    a_ops = [np.asarray(ak, dtype=complex) for ak in a_ops]
    gen = h0 / (1j * hbar)
    for ak in a_ops:
        gen -= (2.0 * alpha / hbar**2) * (ak @ ak)

    psi0 = np.asarray(psi0, dtype=complex).reshape(-1)
    t_grid = np.asarray(t_grid, dtype=float)
    norms = np.empty(t_grid.size)
    rates = np.empty(t_grid.size)
    dissipation = np.empty(t_grid.size)
    for i, t in enumerate(t_grid):
        psi = expm(gen * t) @ psi0
        norms[i] = float(np.vdot(psi, psi).real)
        rates[i] = float(2.0 * np.vdot(psi, gen @ psi).real)
        dissipation[i] = float(
            -(4.0 * alpha / hbar**2) * sum(np.vdot(ak @ psi, ak @ psi).real for ak in a_ops)
        )
    return NormDecayResult(t=t_grid, norms_squared=norms, rates=rates, dissipation_rates=dissipation)
