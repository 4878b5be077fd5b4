"""Bounded-delay message passing between agents"""
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, Field


class ReadAudit(BaseModel):
    """Count of every (sender, kind) read per reader"""
    reads: Dict[int, Dict[Tuple[int, str], int]] = Field(default_factory=dict)

    def record(self, reader: int, sender: int, kind: str) -> None:
        counts = self.reads.setdefault(reader, {})
        counts[(sender, kind)] = counts.get((sender, kind), 0) + 1

    def read_set(self, reader: int) -> set:
        return set(self.reads.get(reader, {}))


class Mailbox:
    """
    Latest values published by every agent.

    A read at step t returns the value published no later than step
    t - 1 - d, where d is drawn uniformly from 0..delay. With delay 0 every
    read sees the sender's current value.
    """

    def __init__(self, n: int, delay: int = 0, seed: int = 0):
        if delay < 0:
            raise ValueError("Delay bound must be nonnegative")
        self.delay = delay
        self.rng = np.random.default_rng(seed)
        self.audit = ReadAudit()
        self._history: Dict[Tuple[int, str], List[Tuple[int, float]]] = {
            (j, kind): [(0, 0.0)] for j in range(n) for kind in ("p", "q")
        }

    def post(self, sender: int, kind: str, step: int, value: float) -> None:
        history = self._history[(sender, kind)]
        history.append((step, value))
        # later reads look back to step - delay at most
        while len(history) > 1 and history[1][0] <= step - self.delay:
            del history[0]

    def read(self, reader: int, sender: int, kind: str, step: int) -> float:
        self.audit.record(reader, sender, kind)
        history = self._history[(sender, kind)]
        if self.delay == 0:
            return history[-1][1]
        horizon = step - 1 - int(self.rng.integers(0, self.delay + 1))
        for posted, value in reversed(history):
            if posted <= horizon:
                return value
        return history[0][1]
