"""Open-system quantum dynamics with explicit thermal noise and a
Hermitian friction operator.

The package builds truncated model systems (harmonic oscillator,
infinite potential well), constructs the friction operator by four
independent routes, assembles the master-equation superoperator, evolves
density matrices toward the canonical state, and verifies the first and
second laws, the modified equipartition theorem and the free-energy
descent along the way.  A secular (Pauli) reduction and the averaged
geometric-Brownian-motion machinery behind the noise terms are included.
"""

from .errors import (
    AccuracyError,
    ConfigError,
    DimensionError,
    DomainError,
    ParameterError,
    PositivityError,
    SeriesDivergenceWarning,
    SolverError,
    StateHealthError,
    SymmetryError,
)
from .friction import BathParams, QuadratureConfig, build_theta
from .liouvillian import Liouvillian, assemble, check_constraints
from .models import SystemModel, build_oscillator, build_well, hamiltonian
from .evolution import EvolutionConfig, evolve, initial_state, propagator
from .thermo import CSV_COLUMNS, ThermoObserver, ThermoRecord, canonical_state
from .gbm import GBMSystem

__all__ = [
    "AccuracyError",
    "BathParams",
    "CSV_COLUMNS",
    "ConfigError",
    "DimensionError",
    "DomainError",
    "EvolutionConfig",
    "GBMSystem",
    "Liouvillian",
    "ParameterError",
    "PositivityError",
    "QuadratureConfig",
    "SeriesDivergenceWarning",
    "SolverError",
    "StateHealthError",
    "SymmetryError",
    "SystemModel",
    "ThermoObserver",
    "ThermoRecord",
    "assemble",
    "build_oscillator",
    "build_theta",
    "build_well",
    "canonical_state",
    "check_constraints",
    "evolve",
    "hamiltonian",
    "initial_state",
    "propagator",
]

__version__ = "0.1.0"
