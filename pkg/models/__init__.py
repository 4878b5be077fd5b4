"""Data models for posiflow"""

from .problem import ProblemData, StateVector, ValidationReport, Violation

__all__ = ["ProblemData", "StateVector", "ValidationReport", "Violation"]
