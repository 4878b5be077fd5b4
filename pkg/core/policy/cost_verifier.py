"""Compares simulated closed-loop cost with the predicted optimal cost p'x0"""
import logging
from typing import Any

import numpy as np
from pydantic import BaseModel

from core.bellman import as_cost_vector
from models.problem import ProblemData
from .closed_loop_simulator import simulate_closed_loop
from .policy_extractor import Policy

logger = logging.getLogger("posiflow.policy")


class CostCheck(BaseModel):
    """Achieved versus predicted cost of a truncated closed-loop run"""
    achieved: float
    predicted: float
    remaining: float
    ok: bool


def verify_cost(
    prob: ProblemData,
    pol: Policy,
    p: Any,
    x0: Any,
    T: int,
    tail_tol: float = 1e-9,
) -> CostCheck:
    """
    Simulate T steps and compare the accumulated cost with p'x0

    The optimal trajectory's tail from x(T) costs exactly p'x(T), so the
    check passes when |achieved - predicted| <= tail_tol + p'x(T).
    """
    p = as_cost_vector(prob, p)
    trajectory = simulate_closed_loop(prob, pol, x0, T)
    predicted = float(p @ trajectory.states[0])
    remaining = float(p @ trajectory.final_state)
    achieved = trajectory.total_cost
    ok = abs(achieved - predicted) <= tail_tol + remaining
    if not ok:
        logger.warning(
            "closed-loop cost %.6g differs from predicted %.6g beyond tail bound %.3g",
            achieved,
            predicted,
            remaining,
        )
    return CostCheck(achieved=achieved, predicted=predicted, remaining=remaining, ok=ok)
