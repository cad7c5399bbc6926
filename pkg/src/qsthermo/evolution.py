"""Time stepping of the vectorized density matrix.

The generator is time independent, so the propagator exp(L dt) is
computed once and applied repeatedly; this is exact time evolution, not
an integration scheme.  State health (trace, Hermiticity, positivity) is
validated at every recorded step and the run aborts rather than clip if
the state degrades.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, StateHealthError
from .matrix_core import expm, hermitian_deviation, unvectorize, vectorize

TRACE_ABORT = 1e-8
NEGATIVITY_ABORT = -1e-7


@dataclass(frozen=True)
class EvolutionConfig:
    dt: float
    steps: int
    record_every: int = 1

    def __post_init__(self):
        if self.dt <= 0:
            raise ParameterError(f"dt must be > 0, got {self.dt}")
        if self.steps < 0:
            raise ParameterError(f"steps must be >= 0, got {self.steps}")
        if self.record_every < 1:
            raise ParameterError(f"record_every must be >= 1, got {self.record_every}")


@dataclass(frozen=True)
class StateHealth:
    """Deviations from the density-matrix invariants at one step."""

    step: int
    trace_deviation: float
    hermiticity_deviation: float
    min_eigenvalue: float


@dataclass
class EvolutionResult:
    records: list = field(default_factory=list)
    health: list = field(default_factory=list)
    final_rho: np.ndarray = None


def initial_state(n_levels, f):
    """Diagonal mixed state with weights 1/k^f, k = 1..N, trace one.

    f = 0 is the maximally mixed state; larger f concentrates the
    population in the low-lying levels.
    """
    if n_levels < 1:
        raise ParameterError(f"n_levels must be >= 1, got {n_levels}")
    weights = 1.0 / np.arange(1, n_levels + 1, dtype=float) ** f
    weights /= weights.sum()
    return np.diag(weights).astype(complex)


def propagator(liouv, dt):
    """exp(L dt), computed once for the whole run."""
    if dt <= 0:
        raise ParameterError(f"dt must be > 0, got {dt}")
    return expm(liouv.full * dt)


def state_health(step, rho):
    return StateHealth(
        step=step,
        trace_deviation=float(abs(np.trace(rho) - 1.0)),
        hermiticity_deviation=hermitian_deviation(rho),
        min_eigenvalue=float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()),
    )


def _validate(health):
    if health.trace_deviation > TRACE_ABORT:
        raise StateHealthError(
            health.step, f"trace drifted by {health.trace_deviation:.3e}"
        )
    if health.min_eigenvalue < NEGATIVITY_ABORT:
        raise StateHealthError(
            health.step, f"negative eigenvalue {health.min_eigenvalue:.3e}"
        )


def evolve(rho0, prop, cfg, observer=None):
    """Iterate vec(rho) <- P vec(rho), recording observables.

    The state is validated and recorded at step 0, at every
    ``record_every``-th step, and at the final step.  ``observer`` (if
    given) must provide ``record(t, rho)``; its return values are
    collected in ``records``.
    """
    n = rho0.shape[0]
    result = EvolutionResult()

    def visit(step, rho):
        health = state_health(step, rho)
        _validate(health)
        result.health.append(health)
        if observer is not None:
            result.records.append(observer.record(step * cfg.dt, rho))

    rho = np.asarray(rho0, dtype=complex)
    visit(0, rho)
    v = vectorize(rho)
    for step in range(1, cfg.steps + 1):
        v = prop @ v
        if step % cfg.record_every == 0 or step == cfg.steps:
            rho = unvectorize(v, n, n)
            visit(step, rho)
    result.final_rho = unvectorize(v, n, n)
    return result
