"""Checks that passive dynamics dominate the largest admissible outflow"""
from typing import List

import numpy as np

from ..problem_data import ProblemData, padded_block_minima, padded_constraint_matrix
from .validation_report import Violation


class DynamicsBoundChecker:
    """
    Checks A >= -diag(d) E_pad >= 0 entrywise, with d_i = min{B_i, 0}
    padded by zeros to length n and E padded by zero rows to n rows.
    """

    def __init__(self, tau_cmp: float = 0.0):
        self.tau_cmp = tau_cmp

    def check(self, prob: ProblemData) -> tuple[bool, List[Violation]]:
        """
        Check the dynamics bound

        Args:
            prob: Dimensionally consistent problem instance

        Returns:
            Tuple of (passed, violations) listing every failing entry
        """
        violations: List[Violation] = []
        if prob.M > prob.n:
            violations.append(Violation(
                location="E",
                description=f"{prob.M} constraint rows exceed state dimension {prob.n}",
            ))
        outflow = -padded_block_minima(prob)[:, None] * padded_constraint_matrix(prob)
        dynamics = prob.A.toarray()

        for row, col in zip(*np.nonzero(outflow < -self.tau_cmp)):
            violations.append(Violation(
                location=f"E[{row},{col}]",
                description=f"outflow bound {outflow[row, col]:g} is negative",
                indices=(int(row), int(col)),
            ))
        for row, col in zip(*np.nonzero(dynamics - outflow < -self.tau_cmp)):
            violations.append(Violation(
                location=f"A[{row},{col}]",
                description=(
                    f"A entry {dynamics[row, col]:g} below admissible outflow "
                    f"{outflow[row, col]:g}"
                ),
                indices=(int(row), int(col)),
            ))
        return not violations, violations
