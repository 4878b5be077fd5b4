"""CSV export of distributed runs"""
import numpy as np

from utils.serialization import rows_to_csv
from .simulator import DistRun


def export_trace(dist_run: DistRun, wide: bool = False) -> str:
    """
    Trace as CSV

    Long format has one row per step (``step,agent,p_hat``); wide format
    snapshots every estimate after each step (``step,p_1..p_n``). Agents
    are numbered from 1.
    """
    if not wide:
        rows = [(step, agent + 1, value) for step, agent, value in dist_run.trace]
        return rows_to_csv(["step", "agent", "p_hat"], rows)

    n = len(dist_run.agents)
    estimates = np.zeros(n)
    rows = []
    for step, agent, value in dist_run.trace:
        estimates[agent] = value
        rows.append([step] + [float(v) for v in estimates])
    return rows_to_csv(["step"] + [f"p_{k + 1}" for k in range(n)], rows)
