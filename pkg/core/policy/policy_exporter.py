"""JSON and CSV export of policies and trajectories"""
from typing import Any, Dict

from models.problem import ProblemData
from models.problem.problem_codec import encode_matrix
from utils.serialization import rows_to_csv
from .closed_loop_simulator import Trajectory
from .gain_assembler import assemble_gain
from .policy_extractor import Policy


def policy_to_dict(prob: ProblemData, pol: Policy) -> Dict[str, Any]:
    """Per-partition choice (null for no action) and the gain as a triplet list"""
    return {
        "choices": list(pol.choices),
        "reduced_costs": [[float(v) for v in costs] for costs in pol.reduced_costs],
        "gain": encode_matrix(assemble_gain(prob, pol), sparse=True),
    }


def export_trajectory_csv(trajectory: Trajectory) -> str:
    """
    Trajectory as CSV with header ``t,x_1..x_n,cost_t,total``

    The terminal row carries no stage cost; total is the running sum
    including the row's own stage cost.
    """
    n = trajectory.states[0].size
    header = ["t"] + [f"x_{i + 1}" for i in range(n)] + ["cost_t", "total"]
    rows = []
    total = 0.0
    for t, state in enumerate(trajectory.states):
        cost = trajectory.stage_costs[t] if t < trajectory.horizon else 0.0
        total += cost
        rows.append([t] + [float(v) for v in state] + [float(cost), float(total)])
    return rows_to_csv(header, rows)
