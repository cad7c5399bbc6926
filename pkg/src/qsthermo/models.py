"""Truncated energy-basis representations of the two model systems.

Both builders return the spectrum together with the position and momentum
matrices projected on the lowest ``n_levels`` energy eigenstates.  The
identity ``p = (m / i hbar) [x, H0]`` holds exactly in the truncated
basis for both systems; the friction-operator construction and the
stationarity of the canonical state rely on it.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .matrix_core import commutator, hermitian_deviation

CONSTRUCTION_TOL = 1e-12


@dataclass(frozen=True)
class SystemModel:
    """One 1-d particle with a discrete truncated spectrum.

    energies are ascending; x and p are Hermitian n_levels x n_levels
    matrices in the energy basis.
    """

    n_levels: int
    energies: np.ndarray
    x: np.ndarray
    p: np.ndarray
    mass: float
    hbar: float
    label: str


def hamiltonian(model):
    """Diagonal Hamiltonian matrix of the model, complex dtype."""
    return np.diag(model.energies.astype(complex))


def _check_construction(model):
    dev_x = hermitian_deviation(model.x)
    dev_p = hermitian_deviation(model.p)
    if max(dev_x, dev_p) > CONSTRUCTION_TOL:
        raise ParameterError(
            f"x/p Hermiticity violated at construction: {max(dev_x, dev_p):.3e}"
        )
    h0 = hamiltonian(model)
    p_from_x = (model.mass / (1j * model.hbar)) * commutator(model.x, h0)
    dev = np.abs(p_from_x - model.p).max()
    if dev > CONSTRUCTION_TOL:
        raise ParameterError(f"p = (m/i hbar)[x, H0] violated: {dev:.3e}")


def build_oscillator(n_levels=16, mass=1.0, omega=1.0, hbar=1.0):
    """Harmonic oscillator, E_n = hbar omega (n + 1/2), n = 0..N-1.

    x_nm = sqrt(hbar/2 m omega) (delta_{n+1,m} sqrt(n+1) + delta_{n,m+1} sqrt(n))
    p_nm = -i sqrt(m omega hbar/2) (delta_{n+1,m} sqrt(n+1) - delta_{n,m+1} sqrt(n))
    """
    if n_levels < 2:
        raise ParameterError(f"n_levels must be >= 2, got {n_levels}")
    if mass <= 0 or omega <= 0 or hbar <= 0:
        raise ParameterError("mass, omega and hbar must all be positive")

    n = np.arange(n_levels)
    energies = hbar * omega * (n + 0.5)

    x = np.zeros((n_levels, n_levels), dtype=complex)
    p = np.zeros((n_levels, n_levels), dtype=complex)
    lx = np.sqrt(hbar / (2.0 * mass * omega))
    lp = np.sqrt(mass * omega * hbar / 2.0)
    for k in range(n_levels - 1):
        r = np.sqrt(k + 1.0)
        x[k, k + 1] = lx * r
        x[k + 1, k] = lx * r
        p[k, k + 1] = -1j * lp * r
        p[k + 1, k] = 1j * lp * r

    model = SystemModel(n_levels, energies, x, p, mass, hbar, "oscillator")
    _check_construction(model)
    return model


def build_well(n_levels=15, mass=1.0, length=1.0, hbar=1.0):
    """Infinite potential well on (0, L), quantum numbers n = 1..N.

    E_n = pi^2 hbar^2 n^2 / (2 m L^2).  Matrix elements (n != m):

    x_nm = (4 n m L / pi^2) ((-1)^m cos(n pi) - 1) / (m^2 - n^2)^2,
    with x_nn = L/2, and
    p_nm = -i hbar (2 n m / L) ((-1)^m cos(n pi) - 1) / (m^2 - n^2).

    cos(n pi) is evaluated as (-1)^n exactly; the numerator vanishes
    unless n + m is odd, so x and p are checkerboard matrices.
    Storage is 0-based: entry (i, j) corresponds to quantum numbers
    (i + 1, j + 1).
    """
    if n_levels < 2:
        raise ParameterError(f"n_levels must be >= 2, got {n_levels}")
    if mass <= 0 or length <= 0 or hbar <= 0:
        raise ParameterError("mass, length and hbar must all be positive")

    qn = np.arange(1, n_levels + 1)
    energies = np.pi**2 * hbar**2 * qn**2 / (2.0 * mass * length**2)

    x = np.zeros((n_levels, n_levels), dtype=complex)
    p = np.zeros((n_levels, n_levels), dtype=complex)
    for i in range(n_levels):
        x[i, i] = length / 2.0
        for j in range(n_levels):
            if i == j:
                continue
            n, m = i + 1, j + 1
            sign = (-1) ** (n + m) - 1  # = -2 for n+m odd, 0 otherwise
            if sign == 0:
                continue
            x[i, j] = (4.0 * n * m * length / np.pi**2) * sign / (m**2 - n**2) ** 2
            p[i, j] = -1j * hbar * (2.0 * n * m / length) * sign / (m**2 - n**2)

    model = SystemModel(n_levels, energies, x, p, mass, hbar, "well")
    _check_construction(model)
    return model
