"""Extracts the optimal stationary feedback from a Bellman fixed point"""
import logging
from typing import Any, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.bellman import as_cost_vector, bellman_residual, reduced_costs, split_blocks
from core.exceptions import StaleCostVectorError
from models.problem import ProblemData, require_valid

logger = logging.getLogger("posiflow.policy")


class PolicyConfig(BaseModel):
    """Configuration for policy extraction"""
    policy_tol: float = Field(default=1e-6, gt=0)
    eps_neg: float = Field(default=1e-9, ge=0)
    allow_unsafe: bool = False


class Policy(BaseModel):
    """
    Selected action per partition.

    choices[i] is None when partition i takes no action, otherwise the
    0-based index of the saturated input inside partition i.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    choices: List[Optional[int]]
    reduced_costs: List[np.ndarray]

    @property
    def selected_count(self) -> int:
        return sum(choice is not None for choice in self.choices)


class PolicyExtractor:
    """Reads off the argmin structure of the reduced costs r_i + B_i'p"""

    def __init__(self, config: Optional[PolicyConfig] = None):
        self.config = config or PolicyConfig()

    def choose(self, costs: np.ndarray) -> Optional[int]:
        """Index of the minimal entry when it is clearly negative, lowest index on ties"""
        if costs.size == 0:
            return None
        j = int(np.argmin(costs))
        return j if costs[j] < -self.config.eps_neg else None

    def extract(self, prob: ProblemData, p: Any) -> Policy:
        """
        Extract the feedback policy for cost vector p

        Args:
            prob: Problem instance
            p: Fixed point of the Bellman operator

        Returns:
            Policy with one choice and one reduced-cost vector per partition

        Raises:
            StaleCostVectorError: If p's residual exceeds policy_tol
            DimensionMismatchError: If p does not have length n
        """
        require_valid(prob, self.config.allow_unsafe, context="policy extraction")
        p = as_cost_vector(prob, p)
        residual = bellman_residual(prob, p)
        if residual > self.config.policy_tol:
            raise StaleCostVectorError(residual, self.config.policy_tol)

        blocks = split_blocks(prob, reduced_costs(prob, p))
        choices = [self.choose(costs) for costs in blocks]
        logger.info(
            "extracted policy: %d of %d partitions act",
            sum(c is not None for c in choices),
            prob.M,
        )
        return Policy(choices=choices, reduced_costs=[b.copy() for b in blocks])


def extract_policy(
    prob: ProblemData,
    p: Any,
    policy_tol: float = 1e-6,
    eps_neg: float = 1e-9,
    allow_unsafe: bool = False,
) -> Policy:
    """Extract the optimal policy from a fixed point p"""
    config = PolicyConfig(policy_tol=policy_tol, eps_neg=eps_neg, allow_unsafe=allow_unsafe)
    return PolicyExtractor(config).extract(prob, p)
