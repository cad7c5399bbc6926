"""Secular approximation: population/coherence decoupling in the energy basis.

The relaxation superoperator restricted to the energy basis is generated
by two four-index tensors built from position matrix elements and
thermal weight factors.  Decoupling populations from coherences yields a
Pauli master equation with golden-rule transition rates that satisfy
detailed balance exactly, plus one scalar decay rate per coherence.
The Schnakenberg form then reproduces the entropy production of the
jump process.
"""

import numpy as np

from .errors import DomainError
from .matrix_core import expm

POPULATION_CONSERVATION_TOL = 1e-12


def _thermal_factor(model, bath):
    """F_ab = exp(D_ab)/cosh(D_ab) with D_ab = (E_a - E_b) / 2 kB T."""
    e = model.energies
    d = (e[:, None] - e[None, :]) / (2.0 * bath.kB * bath.temperature)
    return np.exp(d) / np.cosh(d)


def _coupling(model, bath):
    return bath.kB * bath.temperature * bath.beta * model.mass / model.hbar**2


def gamma_tensors(model, bath):
    """Four-index tensors (Gamma_plus, Gamma_minus).

    Gamma_minus[a,b,c,d] = c x_ab x_cd exp(D_ab)/cosh(D_ab)
    Gamma_plus[a,b,c,d]  = c x_ab x_cd exp(D_dc)/cosh(D_dc)

    with c = kB T beta m / hbar^2.
    """
    c = _coupling(model, bath)
    f = _thermal_factor(model, bath)
    x = model.x
    gamma_minus = c * np.einsum("ab,cd->abcd", x * f, x)
    gamma_plus = c * np.einsum("ab,cd->abcd", x, x * f.T)
    return gamma_plus, gamma_minus


def relaxation_tensor(gamma_plus, gamma_minus):
    """Rebuild R_nmij from the gamma tensors.

    R_nmij = -delta_mj sum_q Gp_nqqi + Gp_jmni + Gm_jmni
             - delta_ni sum_p Gm_jppm

    This must agree elementwise with the relaxation block of the
    assembled superoperator reshaped to four indices.
    """
    n = gamma_plus.shape[0]
    eye = np.eye(n)
    a_ni = np.einsum("nqqi->ni", gamma_plus)
    b_jm = np.einsum("jppm->jm", gamma_minus)
    return (
        np.einsum("jmni->nmij", gamma_plus + gamma_minus)
        - np.einsum("ni,mj->nmij", a_ni, eye)
        - np.einsum("jm,ni->nmij", b_jm, eye)
    )


def pauli_rates(model, bath):
    """Golden-rule transition-rate matrix W, W[n,i] = rate i -> n.

    W_ni = c |x_ni|^2 exp((E_i - E_n)/2 kB T) / cosh((E_i - E_n)/2 kB T)

    Real, nonnegative, zero diagonal, and in detailed balance with the
    canonical populations: W_ni exp(-E_i/kB T) = W_in exp(-E_n/kB T).
    """
    c = _coupling(model, bath)
    f = _thermal_factor(model, bath)
    w = c * np.abs(model.x) ** 2 * f.T
    np.fill_diagonal(w, 0.0)
    return w


def decoherence_rates(model, bath):
    """Per-coherence decay rates gamma_nm (zero on the diagonal).

    gamma_nm = sum_q Gp_nqqn - Gp_mmnn - Gm_mmnn + sum_p Gm_mppm
    """
    gamma_plus, gamma_minus = gamma_tensors(model, bath)
    n = model.n_levels
    a = np.einsum("nqqn->n", gamma_plus).real
    b = np.einsum("mppm->m", gamma_minus).real
    rates = np.empty((n, n))
    for i in range(n):
        for m in range(n):
            rates[i, m] = (
                a[i] - gamma_plus[m, m, i, i].real - gamma_minus[m, m, i, i].real + b[m]
            )
    np.fill_diagonal(rates, 0.0)
    return rates


def rate_generator(w):
    """Generator K of the jump process: K_ni = W_ni (n != i), columns sum to 0."""
    k = np.array(w, dtype=float)
    np.fill_diagonal(k, 0.0)
    np.fill_diagonal(k, -k.sum(axis=0))
    return k


def pauli_evolve(populations, w, dt, steps):
    """Integrate the Pauli master equation by exact exponentiation.

    Returns the (steps + 1, N) array of population vectors.  The rate
    matrix is small, so one expm of the generator replaces explicit
    stepping and there is no stiffness concern.
    """
    p = np.asarray(populations, dtype=float)
    if (p < 0).any():
        raise DomainError(f"populations must be nonnegative, got min {p.min():.3e}")
    prop = expm(rate_generator(w) * dt).real
    series = np.empty((steps + 1, p.size))
    series[0] = p
    for s in range(1, steps + 1):
        p = prop @ p
        series[s] = p
    drift = np.abs(series.sum(axis=1) - series[0].sum()).max()
    if drift > POPULATION_CONSERVATION_TOL:
        raise DomainError(f"total population drifted by {drift:.3e}")
    return series


def schnakenberg(populations, w, kB=1.0):
    """Entropy production rate of the jump process.

    (kB/2) sum_{n != i} (W_ni p_i - W_in p_n) ln[(W_ni p_i)/(W_in p_n)]

    Termwise nonnegative.  A zero population on a connected edge makes
    the term infinite and raises DomainError.
    """
    p = np.asarray(populations, dtype=float)
    n = p.size
    total = 0.0
    for a in range(n):
        for b in range(n):
            if a == b or w[a, b] == 0.0:
                continue
            if p[b] == 0.0 or p[a] == 0.0:
                raise DomainError(
                    f"zero population on connected edge ({a}, {b}); "
                    "entropy production is undefined"
                )
            fwd = w[a, b] * p[b]
            rev = w[b, a] * p[a]
            total += 0.5 * kB * (fwd - rev) * np.log(fwd / rev)
    return total
