"""Structural checks and positivity assumptions for problem instances"""

from .validation_report import Violation, ValidationReport
from .input_sign_checker import InputSignChecker
from .dynamics_bound_checker import DynamicsBoundChecker
from .problem_validator import (
    ValidationConfig,
    ProblemValidator,
    check_assumption_a,
    check_assumption_b,
    validate,
    require_valid,
)

__all__ = [
    "Violation",
    "ValidationReport",
    "InputSignChecker",
    "DynamicsBoundChecker",
    "ValidationConfig",
    "ProblemValidator",
    "check_assumption_a",
    "check_assumption_b",
    "validate",
    "require_valid",
]
