"""Exception and warning types shared across the package."""


class HestonFDError(Exception):
    """Base class for errors raised by this package."""


class RangeError(HestonFDError, ValueError):
    """A numeric input lies outside its admissible range."""


class FellerViolation(RangeError):
    """Variance-process parameters fail 2*kappa*eta > sigma**2."""


class BarrierError(RangeError):
    """Barrier level outside (0, K)."""


class UnknownCase(HestonFDError, KeyError):
    """Benchmark case id outside 1..4."""


class DomainError(HestonFDError, ValueError):
    """Evaluation point outside the option's spatial domain."""


class AssemblyError(HestonFDError):
    """A stencil requires a neighbor the grid does not provide."""


class DimensionError(HestonFDError, ValueError):
    """Vector length does not match the operator dimension."""


class SingularMatrix(HestonFDError, ArithmeticError):
    """A pivot underflowed the relative threshold during factorization."""


class DegenerateFit(HestonFDError, ValueError):
    """Convergence-order fit attempted on non-positive error samples."""


class QuadratureWarning(UserWarning):
    """Tail-truncation estimate of a pricing integral exceeded tolerance."""
