"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix shapes are incompatible with the requested operation."""


class SymmetryError(ValueError):
    """An operator that must be Hermitian is not, beyond tolerance."""


class PositivityError(ValueError):
    """A matrix that must be positive semidefinite has a negative eigenvalue."""


class ParameterError(ValueError):
    """A physical or numerical parameter is out of its admissible range."""


class DomainError(ValueError):
    """An input value lies outside the mathematical domain of the operation."""


class SolverError(RuntimeError):
    """A linear solve has no unique solution (solvability criterion violated)."""


class AccuracyError(RuntimeError):
    """A numerical scheme could not reach its requested tolerance."""


class ConfigError(ValueError):
    """A run-configuration file or value is invalid."""


class StateHealthError(RuntimeError):
    """The evolving density matrix violated a state invariant.

    Carries the step index at which the violation was detected.
    """

    def __init__(self, step, message):
        super().__init__(f"step {step}: {message}")
        self.step = step


class SeriesDivergenceWarning(UserWarning):
    """Spectral gaps exceed the convergence radius of the commutator series."""
