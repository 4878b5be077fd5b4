"""
Optimal stationary feedback.

This module provides:
- Policy extraction from a Bellman fixed point
- The sparse gain K with u = K x
- Closed-loop simulation and cost verification against p'x0
"""

from .policy_extractor import PolicyConfig, Policy, PolicyExtractor, extract_policy
from .gain_assembler import assemble_gain, closed_loop_matrix
from .closed_loop_simulator import (
    SimulationConfig,
    Trajectory,
    ClosedLoopSimulator,
    simulate_closed_loop,
    evaluate_random_policy,
)
from .cost_verifier import CostCheck, verify_cost
from .policy_exporter import policy_to_dict, export_trajectory_csv

__all__ = [
    # Extraction
    "PolicyConfig",
    "Policy",
    "PolicyExtractor",
    "extract_policy",

    # Gain
    "assemble_gain",
    "closed_loop_matrix",

    # Simulation
    "SimulationConfig",
    "Trajectory",
    "ClosedLoopSimulator",
    "simulate_closed_loop",
    "evaluate_random_policy",

    # Verification and export
    "CostCheck",
    "verify_cost",
    "policy_to_dict",
    "export_trajectory_csv",
]
