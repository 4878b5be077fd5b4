"""Agent activation schedules"""
from enum import Enum
from typing import Iterator, Optional

import numpy as np
from pydantic import BaseModel, Field


class ScheduleKind(str, Enum):
    UNIFORM_RANDOM = "uniform_random"
    ROUND_ROBIN = "round_robin"
    FAIR_WINDOW = "fair_window"


class ScheduleSpec(BaseModel):
    """
    Which agent updates at every step.

    UniformRandom samples agents i.i.d. with replacement. FairWindow keeps
    the draws random but lets every agent appear in every window of
    ``window`` consecutive steps. RoundRobin cycles 1..n.
    """
    kind: ScheduleKind = ScheduleKind.UNIFORM_RANDOM
    seed: int = 0
    window: Optional[int] = Field(default=None, ge=1)
    step_limit: int = Field(default=1_000_000, ge=0)


class AgentSampler:
    """Deterministic stream of agent indices for a schedule"""

    def __init__(self, spec: ScheduleSpec, n: int):
        if spec.kind is ScheduleKind.FAIR_WINDOW:
            window = spec.window if spec.window is not None else n
            if window < n:
                raise ValueError(f"Fair window {window} is shorter than the agent count {n}")
        self.spec = spec
        self.n = n
        self.rng = np.random.default_rng(spec.seed)

    def __iter__(self) -> Iterator[int]:
        if self.spec.kind is ScheduleKind.ROUND_ROBIN:
            return self._round_robin()
        if self.spec.kind is ScheduleKind.FAIR_WINDOW:
            return self._fair_window(self.spec.window or self.n)
        return self._uniform()

    def _round_robin(self) -> Iterator[int]:
        while True:
            yield from range(self.n)

    def _uniform(self) -> Iterator[int]:
        while True:
            yield int(self.rng.integers(0, self.n))

    def _fair_window(self, window: int) -> Iterator[int]:
        # deadline[k]: last step at which agent k may appear
        deadline = np.full(self.n, window - 1, dtype=np.int64)
        step = 0
        while True:
            candidate = int(self.rng.integers(0, self.n))
            rest = np.sort(np.delete(deadline, candidate))
            # the k-th most urgent of the others is served at step + k at the earliest
            if np.any(rest < step + 1 + np.arange(rest.size)):
                candidate = int(np.argmin(deadline))
            deadline[candidate] = step + window
            step += 1
            yield candidate
