"""Exception types shared across the package."""


class DualHahnError(ArithmeticError):
    """Base class for all domain errors raised by this package."""


class DenominatorPole(DualHahnError):
    """A denominator vanished where the formula requires it to be nonzero."""

    def __init__(self, message, where=None, factor=None):
        super().__init__(message)
        self.where = where
        self.factor = factor


class DegenerateGrid(DualHahnError):
    """Two grid points coincide."""

    def __init__(self, i, j, value):
        super().__init__(f"grid points {i} and {j} coincide (both equal {value})")
        self.indices = (i, j)
        self.value = value


class NonExactDivision(DualHahnError):
    """A polynomial division that must be exact left a nonzero remainder."""


class SingularEvaluationMatrix(DualHahnError):
    """The matrix of polynomial values on the grid is not invertible."""


class ToleranceExceeded(DualHahnError):
    """A floating-point convergence check missed its tolerance."""

    def __init__(self, message, worst=None):
        super().__init__(message)
        self.worst = worst
