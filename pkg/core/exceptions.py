"""Error types shared across the solver components"""


class DimensionMismatchError(ValueError):
    """Raised when vector or matrix shapes do not fit the problem instance"""


class InvalidInstanceError(ValueError):
    """Raised when an instance fails validation and no override was given"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ProblemFormatError(ValueError):
    """Raised when a problem or graph file cannot be decoded"""


class StaleCostVectorError(ValueError):
    """Raised when a cost vector is too far from a Bellman fixed point"""

    def __init__(self, residual: float, tolerance: float):
        super().__init__(
            f"Cost vector residual {residual:.3e} exceeds policy tolerance {tolerance:.3e}"
        )
        self.residual = residual
        self.tolerance = tolerance


class FeasibilityViolationError(RuntimeError):
    """Raised when a simulated state or input leaves the admissible set"""


class RouteCycleError(RuntimeError):
    """Raised when following the routing policy revisits a node"""

    def __init__(self, route):
        super().__init__(f"Routing policy cycles along {route}")
        self.route = list(route)


class GraphSpecError(ValueError):
    """Raised when a graph description cannot be turned into an instance"""


class RetryBudgetExhaustedError(RuntimeError):
    """Raised when instance generation keeps producing divergent instances"""


class IndexOutOfRangeError(IndexError):
    """Raised when a partition index is outside the problem's partitions"""
