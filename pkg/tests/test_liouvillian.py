import dataclasses

import numpy as np
import pytest

import qsthermo as qt
from qsthermo import friction
from qsthermo.errors import DimensionError, SymmetryError
from qsthermo.matrix_core import unvectorize, vectorize
from qsthermo.models import build_oscillator, build_well

from conftest import random_density_matrix


@pytest.fixture(scope="module")
def setup():
    model = build_oscillator(16)
    bath = friction.BathParams(temperature=1.0, beta=0.3, alpha=0.5)
    theta = friction.theta_energy_basis(model, bath)
    liouv = qt.assemble(model, bath, theta)
    return model, bath, theta, liouv


def test_parts_sum_to_full(setup):
    _, _, _, liouv = setup
    total = liouv.hamiltonian_part + liouv.force_part + liouv.relaxation
    assert np.abs(total - liouv.full).max() < 1e-14


def test_canonical_state_is_stationary(setup):
    model, bath, _, liouv = setup
    rho_eq, _ = qt.canonical_state(model, bath)
    assert np.abs(liouv.full @ vectorize(rho_eq)).max() < 1e-10
    # the relaxation part alone annihilates the canonical state too
    assert np.abs(liouv.relaxation @ vectorize(rho_eq)).max() < 1e-10


def test_zero_friction_leaves_pure_commutator():
    model = build_oscillator(8)
    bath = friction.BathParams(temperature=1.0, beta=0.0, alpha=0.5)
    theta = friction.theta_energy_basis(model, bath)
    liouv = qt.assemble(model, bath, theta)
    assert np.abs(liouv.relaxation).max() == 0.0
    assert np.abs(liouv.full - liouv.hamiltonian_part).max() == 0.0


def test_caldeira_leggett_canonical_state_not_stationary(setup):
    model, _, _, _ = setup
    cl_bath = friction.BathParams(temperature=1.0, beta=0.3, alpha=0.5,
                                  variant="caldeira_leggett")
    liouv = qt.assemble(model, cl_bath, model.p)
    rho_eq, _ = qt.canonical_state(model, cl_bath)
    assert np.abs(liouv.full @ vectorize(rho_eq)).max() > 1e-3


@pytest.mark.parametrize("build,kwargs,beta", [
    (build_oscillator, dict(n_levels=16), 0.3),
    (build_well, dict(n_levels=15, mass=3.0, length=2.0), 1.0),
])
def test_structural_constraints_proposed(build, kwargs, beta):
    model = build(**kwargs)
    bath = friction.BathParams(temperature=1.0, beta=beta, alpha=0.5)
    theta = friction.build_theta(model, bath)
    report = qt.check_constraints(qt.assemble(model, bath, theta))
    assert report.trace_ok
    assert report.hermiticity_ok
    assert report.diagonal_ok
    assert report.cross_ok
    assert report.all_ok


def test_structural_constraints_caldeira_leggett_oscillator():
    model = build_oscillator(16)
    bath = friction.BathParams(temperature=1.0, beta=0.3, alpha=0.5,
                               variant="caldeira_leggett")
    report = qt.check_constraints(qt.assemble(model, bath, model.p))
    assert report.all_ok


def test_caldeira_leggett_well_breaks_cross_nonnegativity():
    # With theta = p the jump-rate factor is 1 + gap/(2 kB T) instead of
    # 1 + tanh(gap/(2 kB T)); level gaps above 2 kB T drive it negative,
    # so the Caldeira-Leggett generator loses positivity on the well
    # spectrum at T = 1.  The tanh reweighting of the proposed friction
    # operator is exactly what keeps every rate nonnegative.
    model = build_well(15, mass=3.0, length=2.0)
    bath = friction.BathParams(temperature=1.0, beta=1.0, alpha=0.5,
                               variant="caldeira_leggett")
    report = qt.check_constraints(qt.assemble(model, bath, model.p))
    assert report.trace_ok
    assert report.hermiticity_ok
    assert report.diagonal_ok
    assert report.cross_min < -1.0


def test_constraints_pass_for_pure_hamiltonian():
    model = build_oscillator(8)
    bath = friction.BathParams(temperature=1.0, beta=0.0, alpha=0.5)
    liouv = qt.assemble(model, bath, friction.theta_energy_basis(model, bath))
    assert qt.check_constraints(liouv).all_ok


def test_corrupted_operator_fails_trace_check(setup):
    _, _, _, liouv = setup
    full = liouv.full.copy()
    full[0, 0] += 1e-3
    corrupted = dataclasses.replace(liouv, full=full)
    report = qt.check_constraints(corrupted)
    assert not report.trace_ok
    assert not report.all_ok


def test_hermitian_input_maps_to_hermitian_traceless(setup, rng):
    _, _, _, liouv = setup
    n = liouv.n_levels
    for _ in range(5):
        rho = random_density_matrix(rng, n)
        out = unvectorize(liouv.full @ vectorize(rho), n, n)
        assert np.abs(out - out.conj().T).max() < 1e-12
        assert abs(np.trace(out)) < 1e-12


def test_linearity(setup, rng):
    _, _, _, liouv = setup
    n = liouv.n_levels
    v = rng.standard_normal(n * n) + 1j * rng.standard_normal(n * n)
    w = rng.standard_normal(n * n) + 1j * rng.standard_normal(n * n)
    a = 0.7 - 0.2j
    lhs = liouv.full @ (a * v + w)
    rhs = a * (liouv.full @ v) + liouv.full @ w
    assert np.abs(lhs - rhs).max() < 1e-12 * np.abs(rhs).max()


def test_force_term_enters_full_generator(setup):
    model, bath, theta, _ = setup
    forced = qt.assemble(model, bath, theta, force=0.5)
    free = qt.assemble(model, bath, theta, force=0.0)
    assert np.abs(forced.force_part).max() > 0
    assert np.abs(forced.relaxation - free.relaxation).max() == 0.0
    # force preserves the structural constraints
    assert qt.check_constraints(forced).all_ok


def test_assemble_validates_theta(setup):
    model, bath, _, _ = setup
    with pytest.raises(SymmetryError):
        qt.assemble(model, bath, np.triu(np.ones((16, 16))))
    with pytest.raises(DimensionError):
        qt.assemble(model, bath, np.eye(4))
