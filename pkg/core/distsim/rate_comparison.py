"""Distributed steps against centralized iterations"""
import logging

from pydantic import BaseModel

from core.bellman import value_iterate
from models.problem import ProblemData
from .schedules import ScheduleKind, ScheduleSpec
from .simulator import run, start_run

logger = logging.getLogger("posiflow.distsim")


class RateComparison(BaseModel):
    distributed_steps: int
    centralized_iterations: int
    ratio: float
    within_band: bool


def rate_ratio(
    prob: ProblemData,
    seed: int = 0,
    tol: float = 1e-9,
    step_limit: int = 10_000_000,
) -> RateComparison:
    """
    Steps of a uniformly random schedule over value-iteration sweeps

    One sweep updates n coordinates, so the ratio is expected near n. A
    ratio outside [n/2, 2n] is logged as a warning.
    """
    centralized = value_iterate(prob, tol=tol)
    if not centralized.converged:
        raise ValueError(f"Centralized solve ended with {centralized.status.value}")
    schedule = ScheduleSpec(kind=ScheduleKind.UNIFORM_RANDOM, seed=seed, step_limit=step_limit)
    result = run(start_run(prob, schedule), observer_tol=tol)
    if not result.converged:
        raise ValueError(f"Distributed run did not converge within {step_limit} steps")

    ratio = result.steps / max(centralized.iterations, 1)
    within = prob.n / 2 <= ratio <= 2 * prob.n
    if not within:
        logger.warning(
            "step ratio %.2f outside [%.1f, %d] for n=%d",
            ratio,
            prob.n / 2,
            2 * prob.n,
            prob.n,
        )
    return RateComparison(
        distributed_steps=result.steps,
        centralized_iterations=centralized.iterations,
        ratio=ratio,
        within_band=within,
    )
