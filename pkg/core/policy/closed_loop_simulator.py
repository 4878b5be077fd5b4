"""Simulates the closed loop x(t+1) = (A + B K) x(t) and accumulates stage costs"""
import logging
from typing import Any, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.exceptions import DimensionMismatchError, FeasibilityViolationError
from models.problem import ProblemData, StateVector
from .gain_assembler import assemble_gain
from .policy_extractor import Policy

logger = logging.getLogger("posiflow.policy")


class SimulationConfig(BaseModel):
    """Configuration for closed-loop simulation"""
    feasibility_tol: float = Field(default=1e-12, ge=0)


class Trajectory(BaseModel):
    """States, inputs and costs of a finite simulation"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    states: List[np.ndarray]
    inputs: List[np.ndarray]
    stage_costs: List[float]
    total_cost: float

    @property
    def horizon(self) -> int:
        return len(self.inputs)

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]


class ClosedLoopSimulator:
    """Steps the dynamics under a stationary or sampled input law"""

    def __init__(self, config: Optional[SimulationConfig] = None):
        self.config = config or SimulationConfig()

    def _check_step(self, prob: ProblemData, t: int, x: np.ndarray, u: np.ndarray) -> None:
        tol = self.config.feasibility_tol * max(1.0, float(np.max(x, initial=0.0)))
        if np.any(u < -tol):
            raise FeasibilityViolationError(f"t={t}: negative input {float(u.min()):g}")
        budgets = prob.E @ x
        for i, (offset, size) in enumerate(zip(prob.block_offsets, prob.block_sizes)):
            used = float(u[offset:offset + size].sum())
            if used > budgets[i] + tol:
                raise FeasibilityViolationError(
                    f"t={t}: partition {i} uses {used:g} above budget {budgets[i]:g}"
                )

    def _check_state(self, t: int, x: np.ndarray) -> None:
        tol = self.config.feasibility_tol * max(1.0, float(np.max(np.abs(x), initial=0.0)))
        if np.any(x < -tol):
            raise FeasibilityViolationError(f"t={t}: state left the positive orthant ({float(x.min()):g})")

    def run(self, prob: ProblemData, input_law, x0: Any, T: int) -> Trajectory:
        """
        Simulate T steps with u(t) = input_law(t, x(t))

        Raises:
            FeasibilityViolationError: If an input or state leaves the admissible set
        """
        if T < 0:
            raise ValueError("Horizon T must be nonnegative")
        x = StateVector.of(x0).x.copy()
        if x.size != prob.n:
            raise DimensionMismatchError(f"Initial state has length {x.size}, expected {prob.n}")

        states, inputs, stage_costs = [x.copy()], [], []
        total = 0.0
        for t in range(T):
            u = np.asarray(input_law(t, x), dtype=np.float64).reshape(-1)
            self._check_step(prob, t, x, u)
            stage = float(prob.s @ x + prob.r @ u)
            x = prob.A @ x + prob.B @ u
            self._check_state(t + 1, x)
            total += stage
            states.append(x.copy())
            inputs.append(u)
            stage_costs.append(stage)
        return Trajectory(states=states, inputs=inputs, stage_costs=stage_costs, total_cost=total)


def simulate_closed_loop(
    prob: ProblemData,
    pol: Policy,
    x0: Any,
    T: int,
    config: Optional[SimulationConfig] = None,
) -> Trajectory:
    """
    Simulate the feedback u(t) = K x(t) for T steps from x0

    Raises:
        FeasibilityViolationError: If the closed loop leaves the admissible set
    """
    gain = assemble_gain(prob, pol)
    return ClosedLoopSimulator(config).run(prob, lambda t, x: gain @ x, x0, T)


def evaluate_random_policy(
    prob: ProblemData,
    x0: Any,
    T: int,
    seed: int,
    config: Optional[SimulationConfig] = None,
) -> Trajectory:
    """
    Simulate random feasible inputs: each partition spends a uniform fraction
    of its budget E_i'x, split across its inputs by Dirichlet weights.
    """
    rng = np.random.default_rng(seed)

    def random_input(t: int, x: np.ndarray) -> np.ndarray:
        u = np.zeros(prob.m)
        budgets = np.maximum(prob.E @ x, 0.0)
        for i, (offset, size) in enumerate(zip(prob.block_offsets, prob.block_sizes)):
            if size == 0:
                continue
            share = rng.uniform() * budgets[i]
            u[offset:offset + size] = share * rng.dirichlet(np.ones(size))
        return u

    return ClosedLoopSimulator(config).run(prob, random_input, x0, T)
