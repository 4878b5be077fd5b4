"""Monotone value iteration from p0 = 0 with divergence detection"""
import logging
from enum import Enum
from typing import Any, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from models.problem import ProblemData, require_valid
from .bellman_operator import as_cost_vector, bellman_apply, homogeneous_apply

logger = logging.getLogger("posiflow.bellman")


class SolveStatus(str, Enum):
    """Outcome of value iteration"""
    FIXED_POINT = "FixedPoint"
    DIVERGED = "Diverged"
    MAX_ITERATIONS = "MaxIterations"


class ValueIterationConfig(BaseModel):
    """Configuration for value iteration"""
    tol: float = Field(default=1e-9, gt=0)
    max_iter: int = Field(default=100000, ge=1)
    divergence_cap: float = Field(default=1e12, gt=0)
    detect_rays: bool = True
    ray_slack: float = Field(default=1e-12, ge=0)
    record_trace: bool = False
    allow_unsafe: bool = False


class SolveReport(BaseModel):
    """Result of a value iteration run"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: SolveStatus
    p: np.ndarray
    iterations: int
    residual_trace: List[float]
    per_coordinate_trace: Optional[List[np.ndarray]] = None

    @property
    def converged(self) -> bool:
        return self.status is SolveStatus.FIXED_POINT


class ValueIterator:
    """Iterates the Bellman operator until a fixed point or divergence"""

    def __init__(self, config: Optional[ValueIterationConfig] = None):
        self.config = config or ValueIterationConfig()

    def _is_growth_ray(self, prob: ProblemData, delta: np.ndarray) -> bool:
        """
        True when the increment d >= 0, d != 0 satisfies d <= T0(d).

        Then T(p + d) >= T(p) + T0(d) >= p + 2d, so every later increment is
        at least d and the iterates grow without bound.
        """
        scale = float(np.max(delta)) if delta.size else 0.0
        if scale <= 0.0:
            return False
        slack = self.config.ray_slack * scale
        if np.any(delta < -slack):
            return False
        return bool(np.all(delta <= homogeneous_apply(prob, delta) + slack))

    def solve(self, prob: ProblemData, p0: Any = None) -> SolveReport:
        """
        Run value iteration

        Args:
            prob: Problem instance
            p0: Optional warm start; defaults to the zero vector

        Returns:
            SolveReport. On FixedPoint, p is the iterate whose residual met
            the tolerance; otherwise p is the last iterate computed.
        """
        require_valid(prob, self.config.allow_unsafe, context="value iteration")
        cfg = self.config
        p = np.zeros(prob.n) if p0 is None else as_cost_vector(prob, p0).copy()
        residuals: List[float] = []
        snapshots: Optional[List[np.ndarray]] = [p.copy()] if cfg.record_trace else None
        debug = logger.isEnabledFor(logging.DEBUG)

        status = SolveStatus.MAX_ITERATIONS
        for iteration in range(1, cfg.max_iter + 1):
            p_next = bellman_apply(prob, p)
            delta = p_next - p
            residual = float(np.max(np.abs(delta)))
            residuals.append(residual)
            if debug:
                logger.debug("iteration %d residual %.3e", iteration, residual)

            if residual <= cfg.tol:
                status = SolveStatus.FIXED_POINT
                break
            if snapshots is not None:
                snapshots.append(p_next.copy())
            if float(np.max(np.abs(p_next))) > cfg.divergence_cap:
                status = SolveStatus.DIVERGED
                p = p_next
                break
            if cfg.detect_rays and self._is_growth_ray(prob, delta):
                status = SolveStatus.DIVERGED
                p = p_next
                break
            p = p_next

        report = SolveReport(
            status=status,
            p=p,
            iterations=len(residuals),
            residual_trace=residuals,
            per_coordinate_trace=snapshots,
        )
        logger.info(
            "value iteration finished: %s after %d iterations (residual %.3e)",
            report.status.value,
            report.iterations,
            residuals[-1] if residuals else float("nan"),
        )
        return report


def value_iterate(
    prob: ProblemData,
    tol: float = 1e-9,
    max_iter: int = 100000,
    divergence_cap: float = 1e12,
    p0: Any = None,
    record_trace: bool = False,
    allow_unsafe: bool = False,
) -> SolveReport:
    """
    Value iteration p_{k+1} = T(p_k) from p_0 = 0

    Raises:
        pydantic.ValidationError: If tol, max_iter or divergence_cap are invalid
        InvalidInstanceError: If the instance fails validation without override
    """
    config = ValueIterationConfig(
        tol=tol,
        max_iter=max_iter,
        divergence_cap=divergence_cap,
        record_trace=record_trace,
        allow_unsafe=allow_unsafe,
    )
    return ValueIterator(config).solve(prob, p0)
