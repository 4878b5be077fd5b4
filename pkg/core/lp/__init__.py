"""
Linear-programming view of the Bellman equation.

This module provides:
- The LP maximize 1'p over p with p <= T(p), written with auxiliary z
- LP and MPS text export
- Feasibility checks and optimality certificates
"""

from .lp_model import LpConfig, LpRow, LpModel, build_lp, partition_indicator
from .lp_writer import format_number, export_lp_text, export_mps_text
from .certificate_checker import FeasibilityResult, Certificate, check_feasible, certify_optimal

__all__ = [
    # Model
    "LpConfig",
    "LpRow",
    "LpModel",
    "build_lp",
    "partition_indicator",

    # Export
    "format_number",
    "export_lp_text",
    "export_mps_text",

    # Certificates
    "FeasibilityResult",
    "Certificate",
    "check_feasible",
    "certify_optimal",
]
