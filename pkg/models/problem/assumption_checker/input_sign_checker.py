"""Checks that negative input coefficients only drain their own partition's state"""
from typing import List

from ..problem_data import ProblemData
from .validation_report import Violation


class InputSignChecker:
    """
    Every negative entry of B_i must sit on row i, so partition i can only
    remove quantity from state i.
    """

    def __init__(self, tau_cmp: float = 0.0):
        self.tau_cmp = tau_cmp

    def check(self, prob: ProblemData) -> tuple[bool, List[Violation]]:
        """
        Check the row placement of negative input coefficients

        Args:
            prob: Dimensionally consistent problem instance

        Returns:
            Tuple of (passed, violations); each violation carries (block, row, col)
        """
        violations: List[Violation] = []
        if prob.M > prob.n:
            violations.append(Violation(
                location="B_blocks",
                description=f"{prob.M} partitions but only {prob.n} rows; partition i needs row i",
            ))
        for i, block in enumerate(prob.B_blocks):
            coo = block.tocoo()
            for row, col, value in zip(coo.row, coo.col, coo.data):
                if row != i and value < -self.tau_cmp:
                    violations.append(Violation(
                        location=f"B_blocks[{i}][{row},{col}]",
                        description=f"negative entry {value:g} outside row {i}",
                        indices=(i, int(row), int(col)),
                    ))
        return not violations, violations
