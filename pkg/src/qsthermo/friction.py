"""Hermitian friction operator, constructed by four independent routes.

The friction operator replaces the momentum in the dissipative part of
the master equation.  In the energy basis it is the momentum matrix
reweighted elementwise:

    Theta_lj = p_lj * tanh(D_lj) / D_lj,   D_lj = (E_l - E_j) / (2 kB T),

with the value 1 at D = 0.  Three further constructions are provided and
cross-validated against this one:

* ``theta_lyapunov`` solves the stationarity condition
  ``Theta B + B Theta = i (2 m kB T / hbar) [x, B]`` with
  ``B = exp(-H0 / kB T)`` as a vectorized linear system;
* ``theta_quadrature`` evaluates the basis-free integral
  ``(2/pi) Int exp(+i H0 eta / kB T) p exp(-i H0 eta / kB T)
  log[coth(pi |eta| / 2)] d eta``;
* ``theta_series`` sums the nested-commutator expansion whose
  coefficients are Bernoulli numbers.

The reweighting factor tends to 1 for all couplings when kB T dominates
every level spacing, which is the regime where the friction operator
degenerates to the plain momentum (the Caldeira-Leggett choice).
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.integrate
import scipy.special

from .errors import AccuracyError, ParameterError, SeriesDivergenceWarning, SolverError
from .matrix_core import commutator, expm, hermitian_deviation, kron, unvectorize, vectorize
from .models import hamiltonian


@dataclass(frozen=True)
class BathParams:
    """Thermal bath: temperature, friction rate, constants, and the
    stochastic-interpretation parameter alpha in (0, 1].

    The diffusion constant is never stored; it is always derived from the
    fluctuation-dissipation relation D = kB T beta / (2 alpha).  alpha = 0
    (Ito) is excluded because it cancels the effect of the noise entirely.
    """

    temperature: float
    beta: float
    kB: float = 1.0
    alpha: float = 1.0
    variant: str = "proposed"

    def __post_init__(self):
        if self.temperature <= 0:
            raise ParameterError(f"temperature must be > 0, got {self.temperature}")
        if self.beta < 0:
            raise ParameterError(f"beta must be >= 0, got {self.beta}")
        if self.kB <= 0:
            raise ParameterError(f"kB must be > 0, got {self.kB}")
        if not 0 < self.alpha <= 1:
            raise ParameterError(
                f"alpha must lie in (0, 1], got {self.alpha}; alpha = 0 (Ito) "
                "cancels the noise and admits no fluctuation-dissipation relation"
            )
        if self.variant not in ("proposed", "caldeira_leggett"):
            raise ParameterError(f"unknown variant {self.variant!r}")

    @property
    def diffusion(self):
        """D = kB T beta / (2 alpha), the fluctuation-dissipation relation."""
        return self.kB * self.temperature * self.beta / (2.0 * self.alpha)


@dataclass(frozen=True)
class QuadratureConfig:
    """Controls for the log-coth kernel quadrature.

    The eta integral is split at eta = 1.  On (0, 1) the logarithmic
    endpoint singularity -ln(pi eta / 2) is integrated against the
    cosine in closed form (sine integral) and only the smooth remainder
    is quadratured; on (1, inf) the kernel decays like 2 exp(-pi eta)
    and the integral is truncated where that bound drops below double
    precision.
    """

    tolerance: float = 1e-8
    eta_cut: float = 30.0
    limit: int = 400
    epsabs: float = 1e-11
    epsrel: float = 1e-11


def _gap_ratios(model, bath):
    """(E_l - E_j) / (2 kB T) for every level pair."""
    e = model.energies
    return (e[:, None] - e[None, :]) / (2.0 * bath.kB * bath.temperature)


def tanh_ratio(delta):
    """tanh(delta)/delta with the analytic value 1 at delta = 0."""
    delta = np.asarray(delta, dtype=float)
    out = np.ones_like(delta)
    mask = delta != 0
    out[mask] = np.tanh(delta[mask]) / delta[mask]
    return out


def theta_energy_basis(model, bath):
    """Friction operator from the closed energy-basis formula."""
    return model.p * tanh_ratio(_gap_ratios(model, bath))


def theta_lyapunov(model, bath):
    """Friction operator from the stationarity (Lyapunov) equation.

    Solves Theta B + B Theta = i (2 m kB T / hbar) [x, B] with
    B = exp(-H0 / kB T), via (B (x) I + I (x) B^T) vec(Theta) = vec(C).
    B is positive definite, so every eigenvalue pair-sum is positive and
    the system is uniquely solvable.
    """
    h0 = hamiltonian(model)
    b = expm(-h0 / (bath.kB * bath.temperature))
    gamma = 2.0 * model.mass * bath.kB * bath.temperature / model.hbar
    rhs = 1j * gamma * commutator(model.x, b)

    eigvals = np.diag(b).real  # b is diagonal in the energy basis
    pair_min = eigvals.min() * 2.0
    if pair_min <= 0.0:
        raise SolverError(
            f"Boltzmann factor pair-sum {pair_min:.3e} is not positive; "
            "the stationarity equation is singular"
        )

    n = model.n_levels
    eye = np.eye(n)
    system = kron(b, eye) + kron(eye, b.T)
    theta = unvectorize(np.linalg.solve(system, vectorize(rhs)), n, n)

    dev = hermitian_deviation(theta)
    if dev > 1e-10:
        raise SolverError(f"Lyapunov solution lost Hermiticity: {dev:.3e}")
    return 0.5 * (theta + theta.conj().T)


def log_coth_weight(omega, quad=None):
    """(2/pi) Int_{-inf}^{inf} e^{i omega eta} log[coth(pi |eta| / 2)] d eta.

    Returns (value, error_estimate).  The kernel is even, so this is
    (4/pi) Int_0^inf cos(omega eta) log[coth(pi eta / 2)] d eta, and it
    equals tanh(omega/2)/(omega/2) analytically; it is evaluated here by
    adaptive quadrature, independently of that closed form.

    On (0, 1) the kernel is split as -ln(pi eta/2) + r(eta) with smooth
    r(eta) = ln[(pi eta/2) coth(pi eta/2)].  The singular part has the
    closed form Int_0^1 cos(w eta) ln(eta) d eta = -Si(w)/w, which keeps
    the scheme accurate for arbitrarily large pair frequencies.
    """
    if quad is None:
        quad = QuadratureConfig()
    w = abs(float(omega))

    def kernel(eta):
        return math.log(1.0 / math.tanh(0.5 * math.pi * eta))

    def smooth_part(eta):
        x = 0.5 * math.pi * eta
        if x == 0.0:
            return 0.0  # x/tanh(x) -> 1
        return math.log(x / math.tanh(x))

    if w == 0.0:
        cos_mean = 1.0          # Int_0^1 cos(w eta) d eta
        si_over_w = 1.0         # Si(w)/w -> 1
    else:
        cos_mean = math.sin(w) / w
        si_over_w = scipy.special.sici(w)[0] / w
    singular = -math.log(0.5 * math.pi) * cos_mean + si_over_w

    val1, err1 = scipy.integrate.quad(
        smooth_part, 0.0, 1.0, weight="cos", wvar=w,
        limit=quad.limit, epsabs=quad.epsabs, epsrel=quad.epsrel,
    )
    # (1, eta_cut): kernel ~ 2 exp(-pi eta); the cosine rides along.
    val2, err2 = scipy.integrate.quad(
        kernel, 1.0, quad.eta_cut, weight="cos", wvar=w,
        limit=quad.limit, epsabs=quad.epsabs, epsrel=quad.epsrel,
    )

    value = (4.0 / math.pi) * (singular + val1 + val2)
    error = (4.0 / math.pi) * (err1 + err2) + 2.0 * math.exp(-math.pi * quad.eta_cut)
    return value, error


def theta_quadrature(model, bath, quad=None):
    """Friction operator from the log-coth integral representation.

    In the energy basis the Heisenberg conjugation reduces to the phase
    exp(i (E_l - E_j) eta / kB T), so each element is the momentum element
    times the kernel weight at the pair frequency.
    """
    if quad is None:
        quad = QuadratureConfig()
    e = model.energies
    omegas = (e[:, None] - e[None, :]) / (bath.kB * bath.temperature)

    cache = {}
    weights = np.ones_like(omegas)
    worst = 0.0
    for (l, j), w in np.ndenumerate(omegas):
        if model.p[l, j] == 0:
            continue
        key = round(abs(w), 12)
        if key not in cache:
            cache[key] = log_coth_weight(key, quad)
        weights[l, j], err = cache[key]
        worst = max(worst, err)

    if worst > quad.tolerance:
        raise AccuracyError(
            f"quadrature error estimate {worst:.3e} exceeds tolerance {quad.tolerance:.1e}"
        )
    return model.p * weights


def bernoulli_numbers(n_max):
    """Bernoulli numbers B_0..B_n_max as exact Fractions (B_1 = -1/2)."""
    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += Fraction(math.comb(m + 1, j)) * b[j]
        b.append(-acc / (m + 1))
    return b


def series_coefficient(n):
    """Coefficient of [H0, p]_{2n} / (kB T)^{2n}: 4 (2^{2n+2} - 1) B_{2n+2} / (2n+2)!."""
    b = bernoulli_numbers(2 * n + 2)[2 * n + 2]
    return float(4 * (Fraction(2) ** (2 * n + 2) - 1) * b / math.factorial(2 * n + 2))


def theta_series(model, bath, order):
    """Friction operator from the nested-commutator Bernoulli expansion.

    Theta = sum_{n=0}^{order} (kB T)^{-2n} [H0, p]_{2n}
            * 4 (2^{2n+2} - 1) B_{2n+2} / (2n+2)!

    where [H0, p]_0 = p and [H0, p]_{k+1} = [H0, [H0, p]_k].  order = 0
    returns p exactly.  The series converges elementwise only where the
    coupled level gap satisfies |E_l - E_j| < pi kB T; if any coupled
    pair exceeds that radius a SeriesDivergenceWarning is emitted and the
    (divergent) partial sum is returned anyway, flagged for the caller.
    """
    if order < 0:
        raise ParameterError(f"order must be >= 0, got {order}")

    coupled = np.abs(model.p) > 0
    np.fill_diagonal(coupled, False)
    gaps = np.abs(_gap_ratios(model, bath))
    if coupled.any() and gaps[coupled].max() >= 0.5 * math.pi:
        warnings.warn(
            f"max coupled level gap ratio {gaps[coupled].max():.3f} >= pi/2; "
            "the commutator series diverges for those elements",
            SeriesDivergenceWarning,
            stacklevel=2,
        )

    h0 = hamiltonian(model)
    kt2 = (bath.kB * bath.temperature) ** 2
    nested = model.p.copy()
    theta = series_coefficient(0) * nested
    for n in range(1, order + 1):
        nested = commutator(h0, commutator(h0, nested))
        theta = theta + series_coefficient(n) * nested / kt2**n
    return theta


def build_theta(model, bath, route="energy_basis", order=6, quad=None):
    """Friction operator for the requested route and bath variant.

    The caldeira_leggett variant bypasses the construction entirely and
    uses the bare momentum.
    """
    if bath.variant == "caldeira_leggett":
        return model.p.copy()
    if route == "energy_basis":
        return theta_energy_basis(model, bath)
    if route == "lyapunov":
        return theta_lyapunov(model, bath)
    if route == "quadrature":
        return theta_quadrature(model, bath, quad)
    if route == "series":
        return theta_series(model, bath, order)
    raise ParameterError(f"unknown theta route {route!r}")
