"""
Error hierarchy.

Every error carries the process exit status the command line frontend
reports for it:
    2  configuration error (bad flags, bad link description file)
    3  computation rejected (invalid input for the requested computation,
       Weyl group or term budget exceeded)
    4  identity failure (a numeric or exact cross-check did not hold)
"""


class InvariantError(ValueError):
    exit_code = 1


# -----------------------------
# Configuration
# -----------------------------

class ConfigError(InvariantError):
    exit_code = 2

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"Invalid {field}: {message}")


# -----------------------------
# Rejected computations
# -----------------------------

class ComputationRejected(InvariantError):
    exit_code = 3


class InvalidRootSystem(ComputationRejected):
    pass


class WeylCapExceeded(ComputationRejected):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"Weyl group has {order} elements, above the configured cap of {cap}")


class LevelTooLow(ComputationRejected):
    def __init__(self, level: int, dual_coxeter: int):
        self.field = "level"
        self.level = level
        self.dual_coxeter = dual_coxeter
        super().__init__(f"Invalid level: k={level} must exceed the dual Coxeter number {dual_coxeter}")


class InvalidWeight(ComputationRejected):
    pass


class WallWeight(ComputationRejected):
    pass


class TermBudgetExceeded(ComputationRejected):
    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"State sum needs {estimate} terms, above the budget of {budget}")


class InvalidLink(ComputationRejected):
    pass


# -----------------------------
# Identity failures
# -----------------------------

class IdentityFailure(InvariantError):
    exit_code = 4


class NumericDegradation(IdentityFailure):
    def __init__(self, identity: str, residual: float, tolerance: float):
        self.identity = identity
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(f"{identity}: residual {residual:.3e} exceeds tolerance {tolerance:.1e}")


class ArithmeticInconsistency(IdentityFailure):
    pass
