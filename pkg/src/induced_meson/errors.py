"""Exception types raised by the solver.

Every error carries a short ``code`` string that ends up in the ``status``
column of scan reports.
"""


class ModelError(Exception):
    code = "error"


class DomainError(ModelError, ValueError):
    code = "domain"


class ConsistencyError(ModelError, ValueError):
    code = "inconsistent"


class MisuseError(ModelError, ValueError):
    code = "misuse"


class NoSolutionError(ModelError):
    code = "no_solution"


class ConvergenceError(ModelError):
    code = "no_convergence"

    def __init__(self, message, best_residual=float("nan"), best_point=None):
        super().__init__(message)
        self.best_residual = best_residual
        self.best_point = best_point


class NoVacuumError(ModelError):
    code = "no_vacuum"


class InstabilityError(ModelError):
    code = "instability"


class OracleRangeError(ModelError):
    code = "oracle_range"
