"""Aggregates structural, sign and assumption checks on a problem instance"""
import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field

from core.exceptions import InvalidInstanceError
from ..problem_data import ProblemData
from .dynamics_bound_checker import DynamicsBoundChecker
from .input_sign_checker import InputSignChecker
from .validation_report import ValidationReport, Violation

logger = logging.getLogger("posiflow.validation")


class ValidationConfig(BaseModel):
    """Configuration for instance validation"""
    tau_cmp: float = Field(default=0.0, ge=0.0)


class ProblemValidator:
    """Validates problem instances and reports every violation found"""

    def __init__(self, config: Optional[ValidationConfig] = None):
        self.config = config or ValidationConfig()
        self.input_signs = InputSignChecker(self.config.tau_cmp)
        self.dynamics_bound = DynamicsBoundChecker(self.config.tau_cmp)

    def check_dimensions(self, prob: ProblemData) -> List[Violation]:
        """List shape inconsistencies between the problem fields"""
        n, M = prob.n, prob.M
        violations = []

        def expect(location: str, actual, expected) -> None:
            if tuple(actual) != tuple(expected):
                violations.append(Violation(
                    location=location,
                    description=f"shape {tuple(actual)} does not match expected {tuple(expected)}",
                ))

        expect("A", prob.A.shape, (n, n))
        expect("E", prob.E.shape, (M, n))
        expect("s", prob.s.shape, (n,))
        if len(prob.B_blocks) != M:
            violations.append(Violation(
                location="B_blocks",
                description=f"{len(prob.B_blocks)} blocks for M = {M} partitions",
            ))
        if len(prob.r_blocks) != len(prob.B_blocks):
            violations.append(Violation(
                location="r_blocks",
                description=f"{len(prob.r_blocks)} cost blocks for {len(prob.B_blocks)} input blocks",
            ))
        for i, block in enumerate(prob.B_blocks):
            if block.shape[0] != n:
                violations.append(Violation(
                    location=f"B_blocks[{i}]",
                    description=f"{block.shape[0]} rows, expected {n}",
                    indices=(i,),
                ))
            if i < len(prob.r_blocks) and prob.r_blocks[i].size != block.shape[1]:
                violations.append(Violation(
                    location=f"r_blocks[{i}]",
                    description=f"length {prob.r_blocks[i].size}, expected {block.shape[1]}",
                    indices=(i,),
                ))
        return violations

    def check_signs(self, prob: ProblemData) -> List[Violation]:
        """List negative entries of s, r, E and A"""
        tau = self.config.tau_cmp
        violations = []
        for index in np.flatnonzero(prob.s < -tau):
            violations.append(Violation(
                location=f"s[{index}]",
                description=f"negative state cost {prob.s[index]:g}",
                indices=(int(index),),
            ))
        for i, block in enumerate(prob.r_blocks):
            for index in np.flatnonzero(block < -tau):
                violations.append(Violation(
                    location=f"r_blocks[{i}][{index}]",
                    description=f"negative input cost {block[index]:g}",
                    indices=(i, int(index)),
                ))
        for name, matrix in (("E", prob.E), ("A", prob.A)):
            coo = matrix.tocoo()
            for row, col, value in zip(coo.row, coo.col, coo.data):
                if value < -tau:
                    violations.append(Violation(
                        location=f"{name}[{row},{col}]",
                        description=f"negative entry {value:g}",
                        indices=(int(row), int(col)),
                    ))
        return violations

    def check_assumption_b(self, prob: ProblemData) -> tuple[bool, List[Violation]]:
        return self.input_signs.check(prob)

    def check_assumption_a(self, prob: ProblemData) -> tuple[bool, List[Violation]]:
        return self.dynamics_bound.check(prob)

    def validate(self, prob: ProblemData) -> ValidationReport:
        """
        Run every check on the instance

        Any dimension or sign violation clears both assumption flags, so a
        report is clean exactly when it lists no violations.

        Args:
            prob: Problem instance

        Returns:
            ValidationReport with all violations found
        """
        violations = self.check_dimensions(prob)
        if violations:
            # Assumption checks need consistent shapes
            return ValidationReport(
                assumption_b_ok=False, assumption_a_ok=False, violations=violations
            )

        data_violations = self.check_signs(prob)
        b_ok, b_violations = self.check_assumption_b(prob)
        a_ok, a_violations = self.check_assumption_a(prob)
        violations = data_violations + b_violations + a_violations
        return ValidationReport(
            assumption_b_ok=b_ok and not data_violations,
            assumption_a_ok=a_ok and not data_violations,
            violations=violations,
        )


def check_assumption_b(prob: ProblemData, tau_cmp: float = 0.0) -> tuple[bool, List[Violation]]:
    """Negative entries of B_i lie on row i only"""
    return InputSignChecker(tau_cmp).check(prob)


def check_assumption_a(prob: ProblemData, tau_cmp: float = 0.0) -> tuple[bool, List[Violation]]:
    """A >= -diag(d) E_pad >= 0"""
    return DynamicsBoundChecker(tau_cmp).check(prob)


def validate(prob: ProblemData, tau_cmp: float = 0.0) -> ValidationReport:
    """Validate an instance with the given comparison slack"""
    return ProblemValidator(ValidationConfig(tau_cmp=tau_cmp)).validate(prob)


def require_valid(
    prob: ProblemData,
    allow_unsafe: bool = False,
    context: str = "solver",
) -> ValidationReport:
    """
    Validate and refuse dirty instances unless explicitly overridden

    Args:
        prob: Problem instance
        allow_unsafe: Accept instances failing validation
        context: Caller name used in log messages

    Returns:
        The validation report

    Raises:
        InvalidInstanceError: If the report is not clean and allow_unsafe is False
    """
    report = validate(prob)
    if report.is_clean:
        return report
    if not allow_unsafe:
        for violation in report.violations:
            logger.error("%s: %s", violation.location, violation.description)
        raise InvalidInstanceError(
            f"Instance failed validation with {len(report.violations)} violation(s); "
            f"{context} refuses it without the unsafe override",
            report,
        )
    logger.warning(
        "%s running on an instance with %d violation(s); positivity is not guaranteed",
        context,
        len(report.violations),
    )
    return report
