"""Asynchronous distributed value iteration, one agent update per step"""
import logging
from typing import Any, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.bellman import bellman_residual
from core.policy import Policy
from models.problem import ProblemData
from .agent_state import AgentState, build_agents
from .mailbox import Mailbox
from .schedules import AgentSampler, ScheduleSpec

logger = logging.getLogger("posiflow.distsim")


class DistRun(BaseModel):
    """
    Mutable state of a simulation: agents, schedule position and trace.

    trace holds (step, agent, new p_hat) with steps numbered from 1.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    problem: ProblemData
    agents: List[AgentState]
    schedule: ScheduleSpec
    step_count: int = 0
    trace: List[Tuple[int, int, float]] = Field(default_factory=list)
    delay: int = Field(default=0, ge=0)
    record_argmin: bool = False
    mailbox: Mailbox
    sampler: Any

    def estimates(self) -> np.ndarray:
        """All p_hat, as only the observer may assemble them"""
        return np.array([agent.p_hat for agent in self.agents], dtype=np.float64)


class RunResult(BaseModel):
    """Outcome of a simulation"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    converged: bool
    steps: int
    p_hat_final: np.ndarray
    residual: float


def start_run(
    prob: ProblemData,
    schedule: Optional[ScheduleSpec] = None,
    delay: int = 0,
    record_argmin: bool = False,
    allow_unsafe: bool = False,
) -> DistRun:
    """
    Set up agents, sampler and mailbox with every estimate at zero

    The mailbox delay draws are seeded from the schedule seed, so a run is
    determined by (schedule, delay).
    """
    schedule = schedule or ScheduleSpec()
    agents = build_agents(prob, allow_unsafe=allow_unsafe)
    return DistRun(
        problem=prob,
        agents=agents,
        schedule=schedule,
        delay=delay,
        record_argmin=record_argmin,
        mailbox=Mailbox(prob.n, delay=delay, seed=schedule.seed + 1),
        sampler=iter(AgentSampler(schedule, prob.n)),
    )


def agent_update(run: DistRun, i: int) -> AgentState:
    """
    Let agent i receive its neighbors' estimates and refresh its own

        q_i <- min{r_i + B_i' p_hat, 0}
        p_i <- s_i + A_i' p_hat + q_i E_ii + sum_{j in N_E} q_j E_ji

    Entries of p_hat outside the agent's read set multiply zeros of B_i
    and A_i and are never read.
    """
    if not 0 <= i < len(run.agents):
        raise IndexError(f"Agent index {i} outside 0..{len(run.agents) - 1}")
    agent = run.agents[i]
    step = run.step_count + 1

    p_seen = {j: run.mailbox.read(i, j, "p", step) for j in agent.p_read_set}
    p_seen[i] = agent.p_hat
    q_seen = {j: run.mailbox.read(i, j, "q", step) for j in agent.neighbors_E}

    argmin, costs = None, None
    q_hat = 0.0
    if agent.b_local.shape[1]:
        p_local = np.array([p_seen[j] for j in agent.b_rows], dtype=np.float64)
        costs = agent.r + agent.b_local.T @ p_local
        argmin = int(np.argmin(costs))
        q_hat = min(float(costs[argmin]), 0.0)

    p_hat = agent.s + sum(a * p_seen[j] for j, a in agent.a_column.items())
    p_hat += q_hat * agent.e_column.get(i, 0.0)
    p_hat += sum(q_seen[j] * agent.e_column[j] for j in agent.neighbors_E)

    update = {"p_hat": float(p_hat), "q_hat": q_hat}
    if run.record_argmin:
        update.update(argmin=argmin, local_reduced_costs=costs)
    updated = agent.model_copy(update=update)

    run.agents[i] = updated
    run.mailbox.post(i, "p", step, updated.p_hat)
    run.mailbox.post(i, "q", step, updated.q_hat)
    run.step_count = step
    run.trace.append((step, i, updated.p_hat))
    return updated


def run(dist_run: DistRun, observer_tol: float = 1e-9, observer_interval: int = 1) -> RunResult:
    """
    Execute scheduled updates until the observer sees a small residual

    The observer sits outside the protocol: it assembles all estimates and
    checks bellman_residual <= observer_tol every observer_interval steps.

    Returns:
        RunResult; converged is False when step_limit was reached first
    """
    if observer_tol <= 0:
        raise ValueError("observer_tol must be positive")
    if observer_interval < 1:
        raise ValueError("observer_interval must be at least 1")
    prob = dist_run.problem
    limit = dist_run.schedule.step_limit

    residual = bellman_residual(prob, dist_run.estimates())
    converged = residual <= observer_tol
    while not converged and dist_run.step_count < limit:
        agent_update(dist_run, next(dist_run.sampler))
        if dist_run.step_count % observer_interval == 0 or dist_run.step_count == limit:
            residual = bellman_residual(prob, dist_run.estimates())
            converged = residual <= observer_tol

    result = RunResult(
        converged=converged,
        steps=dist_run.step_count,
        p_hat_final=dist_run.estimates(),
        residual=residual,
    )
    if converged:
        logger.info("distributed run converged after %d steps (residual %.3e)", result.steps, residual)
    else:
        logger.warning("distributed run hit the step limit %d (residual %.3e)", limit, residual)
    return result


def policy_from_agents(dist_run: DistRun, eps_neg: float = 1e-9) -> Policy:
    """
    Policy recorded by the agents themselves

    Raises:
        ValueError: If the run did not record argmins
    """
    if not dist_run.record_argmin:
        raise ValueError("Run was started without record_argmin")
    choices, reduced = [], []
    for agent in dist_run.agents:
        costs = agent.local_reduced_costs if agent.local_reduced_costs is not None else np.zeros(0)
        acts = agent.argmin is not None and costs[agent.argmin] < -eps_neg
        choices.append(agent.argmin if acts else None)
        reduced.append(costs)
    return Policy(choices=choices, reduced_costs=reduced)
