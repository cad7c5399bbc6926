"""Assembly of the master-equation superoperator in vectorized form.

The equation of motion for the density matrix is

    d rho/dt = (1/i hbar) [H0, rho] - (f/i hbar) [x, rho]
               - (kB T beta m / hbar^2) [x, [x, rho]]
               + (beta / 2 i hbar) [x, Theta rho + rho Theta],

assembled as an N^2 x N^2 matrix acting on row-major vec(rho).  The
noise (double commutator) and friction terms together form the
relaxation part; for the proposed friction operator the canonical state
exp(-H0/kB T)/Z is its exact kernel.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SymmetryError
from .matrix_core import hermitian_deviation, kron
from .models import hamiltonian

CONSTRAINT_TOL = 1e-12


@dataclass(frozen=True)
class Liouvillian:
    """Superoperator split into Hamiltonian, force and relaxation parts."""

    full: np.ndarray
    relaxation: np.ndarray
    hamiltonian_part: np.ndarray
    force_part: np.ndarray
    variant: str
    n_levels: int


def _commutator_superop(a):
    eye = np.eye(a.shape[0])
    return kron(a, eye) - kron(eye, a.T)


def _anticommutator_superop(a):
    eye = np.eye(a.shape[0])
    return kron(a, eye) + kron(eye, a.T)


def assemble(model, bath, theta, force=0.0):
    """Build the full superoperator for one model/bath/friction choice."""
    n = model.n_levels
    theta = np.asarray(theta, dtype=complex)
    if theta.shape != (n, n):
        raise DimensionError(f"theta shape {theta.shape} does not match n_levels {n}")
    dev = hermitian_deviation(theta)
    if dev > 1e-10:
        raise SymmetryError(f"theta must be Hermitian, deviation {dev:.3e}")

    hbar = model.hbar
    cx = _commutator_superop(model.x)
    ham = _commutator_superop(hamiltonian(model)) / (1j * hbar)
    force_part = -(force / (1j * hbar)) * cx
    noise = -(bath.kB * bath.temperature * bath.beta * model.mass / hbar**2) * (cx @ cx)
    friction = (bath.beta / (2j * hbar)) * (cx @ _anticommutator_superop(theta))
    relaxation = noise + friction
    return Liouvillian(
        full=ham + force_part + relaxation,
        relaxation=relaxation,
        hamiltonian_part=ham,
        force_part=force_part,
        variant=bath.variant,
        n_levels=n,
    )


@dataclass(frozen=True)
class ConstraintReport:
    """Residuals of the four structural master-equation constraints.

    trace_residual        max |sum_i L_{iirs}|          (trace preserved)
    hermiticity_residual  max |L*_{ijrs} - L_{jisr}|    (Hermiticity preserved)
    diagonal_max          max_i Re L_{iiii}             (must be <= 0)
    cross_min             min_{j != i} Re L_{jjii}      (must be >= 0)
    """

    trace_residual: float
    hermiticity_residual: float
    diagonal_max: float
    cross_min: float
    tol: float

    @property
    def trace_ok(self):
        return self.trace_residual < self.tol

    @property
    def hermiticity_ok(self):
        return self.hermiticity_residual < self.tol

    @property
    def diagonal_ok(self):
        return self.diagonal_max <= self.tol

    @property
    def cross_ok(self):
        return self.cross_min >= -self.tol

    @property
    def all_ok(self):
        return self.trace_ok and self.hermiticity_ok and self.diagonal_ok and self.cross_ok

    def __str__(self):
        rows = [
            ("trace preservation", self.trace_residual, self.trace_ok),
            ("hermiticity preservation", self.hermiticity_residual, self.hermiticity_ok),
            ("diagonal nonpositivity", self.diagonal_max, self.diagonal_ok),
            ("cross nonnegativity", self.cross_min, self.cross_ok),
        ]
        return "\n".join(
            f"  {name:<26s} {value:+.3e}  {'pass' if ok else 'FAIL'}"
            for name, value, ok in rows
        )


def check_constraints(liouv, tol=CONSTRAINT_TOL):
    """Evaluate the four structural constraints on an assembled operator.

    The Hermiticity-preservation pairing compares L*_{ijrs} with
    L_{jisr}: conjugating the equation of motion and using
    rho_sr = rho*_rs forces the column indices to swap along with the
    row indices.
    """
    n = liouv.n_levels
    t = liouv.full.reshape(n, n, n, n)

    trace_residual = float(np.abs(np.einsum("iirs->rs", t)).max())
    hermiticity_residual = float(np.abs(np.conj(t) - t.transpose(1, 0, 3, 2)).max())
    diag = np.array([t[i, i, i, i] for i in range(n)])
    cross = np.array(
        [t[j, j, i, i] for i in range(n) for j in range(n) if i != j]
    )
    return ConstraintReport(
        trace_residual=trace_residual,
        hermiticity_residual=hermiticity_residual,
        diagonal_max=float(diag.real.max()),
        cross_min=float(cross.real.min()),
        tol=tol,
    )
