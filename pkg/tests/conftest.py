import math

import numpy as np
import pytest

import qsthermo as qt
from qsthermo import friction

FIG1_DT = math.pi / 200
FIG2_DT = 0.007
FIG1_F_VALUES = (1.0, 2.0, 3.0, 4.0)
FIG2_F_VALUES = (1.5, 3.0, 4.5, 6.0)


class Pipeline:
    """Model, bath, friction operator, Liouvillian and propagator bundle."""

    def __init__(self, model, bath, dt, force=0.0):
        self.model = model
        self.bath = bath
        self.theta = friction.build_theta(model, bath)
        self.liouv = qt.assemble(model, bath, self.theta, force=force)
        self.observer = qt.ThermoObserver(model, bath, self.liouv, self.theta, force=force)
        self.dt = dt
        self.propagator = qt.propagator(self.liouv, dt)
        self.rho_eq, self.z = qt.canonical_state(model, bath)

    def run(self, f, steps, record_every=1):
        rho0 = qt.initial_state(self.model.n_levels, f)
        cfg = qt.EvolutionConfig(dt=self.dt, steps=steps, record_every=record_every)
        return qt.evolve(rho0, self.propagator, cfg, self.observer)


@pytest.fixture(scope="session")
def fig1_pipeline():
    model = qt.build_oscillator(16, mass=1.0, omega=1.0, hbar=1.0)
    bath = qt.BathParams(temperature=1.0, beta=0.3, kB=1.0, alpha=0.5)
    return Pipeline(model, bath, FIG1_DT)


@pytest.fixture(scope="session")
def fig2_pipeline():
    model = qt.build_well(15, mass=3.0, length=2.0, hbar=1.0)
    bath = qt.BathParams(temperature=1.0, beta=1.0, kB=1.0, alpha=0.5)
    return Pipeline(model, bath, FIG2_DT)


@pytest.fixture(scope="session")
def fig1_cl_pipeline():
    model = qt.build_oscillator(16, mass=1.0, omega=1.0, hbar=1.0)
    bath = qt.BathParams(temperature=1.0, beta=0.3, kB=1.0, alpha=0.5, variant="caldeira_leggett")
    return Pipeline(model, bath, FIG1_DT)


@pytest.fixture(scope="session")
def fig1_runs(fig1_pipeline):
    return {f: fig1_pipeline.run(f, steps=1000) for f in FIG1_F_VALUES}


@pytest.fixture(scope="session")
def fig2_runs(fig2_pipeline):
    return {f: fig2_pipeline.run(f, steps=1000) for f in FIG2_F_VALUES}


@pytest.fixture(scope="session")
def extended_fig1_run(fig1_pipeline):
    """10000 steps of pi/200 with f = 2, recorded sparsely."""
    return fig1_pipeline.run(2.0, steps=10_000, record_every=500)


@pytest.fixture(scope="session")
def extended_cl_run(fig1_cl_pipeline):
    return fig1_cl_pipeline.run(2.0, steps=10_000, record_every=500)


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (a + a.conj().T)


def random_density_matrix(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real
