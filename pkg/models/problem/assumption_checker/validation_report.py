"""Validation report records"""
from typing import List, Tuple

from pydantic import BaseModel, model_validator


class Violation(BaseModel):
    """One failed check with the entry it refers to"""
    location: str
    description: str
    indices: Tuple[int, ...] = ()


class ValidationReport(BaseModel):
    """Outcome of validating a problem instance"""
    assumption_b_ok: bool
    assumption_a_ok: bool
    violations: List[Violation] = []

    @model_validator(mode="after")
    def _flags_match_violations(self) -> "ValidationReport":
        clean = self.assumption_a_ok and self.assumption_b_ok
        if clean == bool(self.violations):
            raise ValueError("Report flags must be true exactly when there are no violations")
        return self

    @property
    def is_clean(self) -> bool:
        return not self.violations

    def locations(self) -> List[str]:
        return [violation.location for violation in self.violations]
