"""Exception types shared across the package."""


class DegeneratePointError(ValueError):
    """Qubit eigenvectors are undefined where the adiabatic gap vanishes."""


class DegenerateGroundStateError(ValueError):
    """The zero-temperature state is an equal mixture over degenerate minima;
    single-branch quantities are refused unless a well is selected explicitly."""


class ConvergenceError(RuntimeError):
    """A numerical routine (eigensolver, quadrature, truncation, grid retry)
    failed to meet its tolerance."""
