"""Feasibility checks and optimality certificates for the Bellman LP"""
import logging
from typing import Any, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from core.bellman import as_cost_vector, partition_minima, reduced_costs
from core.exceptions import DimensionMismatchError
from models.problem import ProblemData
from .lp_model import LpConfig, LpModel, build_lp

logger = logging.getLogger("posiflow.lp")


class FeasibilityResult(BaseModel):
    """Outcome of checking a point (p, z) against every row and bound"""
    feasible: bool
    max_violation: float
    worst: Optional[str] = None


class Certificate(BaseModel):
    """
    Optimality certificate for a candidate cost vector.

    z is chosen as -min{r_i + B_i'p, 0}; p solves the fixed-point equation
    when the point is feasible and every Bellman row is tight.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    feasible: bool
    z: np.ndarray
    tight_rows: List[str]
    max_violation: float
    n: int

    @property
    def all_tight(self) -> bool:
        return len(self.tight_rows) == self.n

    @property
    def certified(self) -> bool:
        return self.feasible and self.all_tight


def check_feasible(
    model: LpModel,
    p: Any,
    z: Any,
    config: Optional[LpConfig] = None,
) -> FeasibilityResult:
    """
    Check all rows and the bounds p >= 0, z >= 0 within tau_lp

    Args:
        model: LP built by build_lp
        p: Candidate of length n
        z: Candidate of length M

    Returns:
        FeasibilityResult with the worst violation and where it occurs

    Raises:
        DimensionMismatchError: If p or z has the wrong length
    """
    config = config or LpConfig()
    p = np.asarray(p, dtype=np.float64).reshape(-1)
    z = np.asarray(z, dtype=np.float64).reshape(-1)
    if p.size != model.n or z.size != model.M:
        raise DimensionMismatchError(
            f"Point has lengths ({p.size}, {z.size}), model expects ({model.n}, {model.M})"
        )
    point = np.concatenate([p, z])

    worst, max_violation = None, 0.0
    if model.rows:
        excess = model.constraint_matrix() @ point - model.rhs()
        k = int(np.argmax(excess))
        if excess[k] > max_violation:
            worst, max_violation = model.rows[k].name, float(excess[k])
    k = int(np.argmin(point))
    if -point[k] > max_violation:
        worst, max_violation = model.labels[k], float(-point[k])

    return FeasibilityResult(
        feasible=max_violation <= config.tau_lp,
        max_violation=max_violation,
        worst=worst,
    )


def certify_optimal(
    prob: ProblemData,
    p: Any,
    config: Optional[LpConfig] = None,
) -> Certificate:
    """
    Build z from p and check feasibility and tightness of the Bellman rows

    Args:
        prob: Problem instance
        p: Candidate cost vector

    Returns:
        Certificate listing the tight Bellman rows
    """
    config = config or LpConfig()
    p = as_cost_vector(prob, p)
    z = -partition_minima(prob, reduced_costs(prob, p))
    # partition_minima returns -0.0 for nonnegative reduced costs
    z = np.where(z == 0, 0.0, z)

    model = build_lp(prob)
    result = check_feasible(model, p, z, config)
    point = np.concatenate([p, z])
    slack = model.rhs()[:prob.n] - model.constraint_matrix()[:prob.n] @ point
    tight = [
        row.name
        for row, gap in zip(model.bellman_rows, slack)
        if abs(gap) <= config.tau_lp
    ]
    logger.debug(
        "certificate: feasible=%s, %d of %d Bellman rows tight",
        result.feasible,
        len(tight),
        prob.n,
    )
    return Certificate(
        feasible=result.feasible,
        z=z,
        tight_rows=tight,
        max_violation=result.max_violation,
        n=prob.n,
    )
