"""Dense complex matrix algebra used throughout the package.

All operators live in a truncated orthonormal basis and are stored as
dense complex ``numpy`` arrays.  Vectorization is ROW-major (C order):
``vec`` stacks consecutive rows, so the identities

    vec(B C)   = (B ⊗ I) vec(C) = (I ⊗ Cᵀ) vec(B)
    vec(A B C) = (A ⊗ I)(I ⊗ Cᵀ) vec(B)

hold with the Kronecker factors in this order.  Column-major stacking
would silently transpose every superoperator built here.
"""

import numpy as np
import scipy.linalg

from .errors import DimensionError, PositivityError, SymmetryError

HERMITIAN_TOL = 1e-10
LOG_EIGENVALUE_FLOOR = 1e-14


def _as_matrix(a):
    a = np.asarray(a)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def _require_square(a, what="matrix"):
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {a.shape}")
    return a


def hermitian_deviation(a):
    """Max elementwise deviation of ``a`` from its conjugate transpose."""
    a = _require_square(a)
    return float(np.abs(a - a.conj().T).max())


def is_hermitian(a, tol=HERMITIAN_TOL):
    return hermitian_deviation(a) <= tol


def commutator(a, b):
    """Return ``a b - b a`` for square matrices of the same dimension."""
    a = _require_square(a, "commutator argument")
    b = _require_square(b, "commutator argument")
    if a.shape != b.shape:
        raise DimensionError(f"commutator shapes differ: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def anticommutator(a, b):
    """Return ``a b + b a`` for square matrices of the same dimension."""
    a = _require_square(a, "anticommutator argument")
    b = _require_square(b, "anticommutator argument")
    if a.shape != b.shape:
        raise DimensionError(f"anticommutator shapes differ: {a.shape} vs {b.shape}")
    return a @ b + b @ a


def kron(a, b):
    """Kronecker product, blocks ``a_ij * b``."""
    return np.kron(np.asarray(a), np.asarray(b))


def vectorize(a):
    """Stack the rows of ``a`` into a single vector (row-major)."""
    return _as_matrix(a).reshape(-1)


def unvectorize(v, rows, cols):
    """Inverse of :func:`vectorize` for a ``rows x cols`` matrix."""
    v = np.asarray(v).reshape(-1)
    if v.size != rows * cols:
        raise DimensionError(f"vector of length {v.size} is not {rows}x{cols}")
    return v.reshape(rows, cols)


def expm(a):
    """Matrix exponential.

    Hermitian inputs are routed through the eigendecomposition; general
    matrices go through scaling-and-squaring with a Pade approximant
    (``scipy.linalg.expm``).
    """
    a = _require_square(a, "expm argument")
    if is_hermitian(a):
        w, u = np.linalg.eigh(a)
        return (u * np.exp(w)) @ u.conj().T
    return scipy.linalg.expm(np.asarray(a, dtype=complex))


def herm_eig(a, tol=HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(w, u)`` with eigenvalues ``w`` ascending and unitary ``u``
    such that ``a = u @ diag(w) @ u.conj().T``.
    """
    a = _require_square(a, "herm_eig argument")
    dev = hermitian_deviation(a)
    if dev > tol:
        raise SymmetryError(f"matrix is not Hermitian: max |a - a^dagger| = {dev:.3e}")
    w, u = np.linalg.eigh(a)
    return w, u


def logm_psd(a, floor=LOG_EIGENVALUE_FLOOR):
    """Spectral logarithm of a Hermitian positive-semidefinite matrix.

    Eigenvalues below ``floor`` are clamped to ``floor`` before taking
    logs, which keeps ``p ln p``-type expressions finite for vanishing
    populations.  Eigenvalues below ``-1e-10`` raise ``PositivityError``.
    """
    w, u = herm_eig(a)
    if w.min() < -1e-10:
        raise PositivityError(f"matrix has negative eigenvalue {w.min():.3e}")
    w = np.maximum(w, floor)
    return (u * np.log(w)) @ u.conj().T


def spectral_norm(a):
    """Largest singular value (for Hermitian input, max |eigenvalue|)."""
    a = _as_matrix(a)
    if not np.any(a):
        return 0.0
    return float(np.linalg.norm(a, 2))
