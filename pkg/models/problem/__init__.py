"""
Problem instances of optimal control for positive linear systems.

This package provides:
- ProblemData and StateVector records
- Structural, sign and positivity-assumption validation
- The JSON problem file format
"""

from .problem_data import (
    ProblemData,
    StateVector,
    as_csr,
    as_vector,
    block_min_or_zero,
    padded_block_minima,
    padded_constraint_matrix,
    lower_bound_matrix,
    successor,
    is_feasible_input,
)
from .assumption_checker import (
    Violation,
    ValidationReport,
    ValidationConfig,
    ProblemValidator,
    check_assumption_a,
    check_assumption_b,
    validate,
    require_valid,
)
from .problem_codec import problem_from_dict, problem_to_dict, load_problem, save_problem

__all__ = [
    # Data
    "ProblemData",
    "StateVector",
    "as_csr",
    "as_vector",
    "block_min_or_zero",
    "padded_block_minima",
    "padded_constraint_matrix",
    "lower_bound_matrix",
    "successor",
    "is_feasible_input",

    # Validation
    "Violation",
    "ValidationReport",
    "ValidationConfig",
    "ProblemValidator",
    "check_assumption_a",
    "check_assumption_b",
    "validate",
    "require_valid",

    # File format
    "problem_from_dict",
    "problem_to_dict",
    "load_problem",
    "save_problem",
]
