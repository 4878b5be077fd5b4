"""
Asynchronous distributed value iteration.

This module provides:
- Agents holding only their local data and estimates
- Round-robin, uniformly random and fair-window schedules
- A bounded-delay mailbox that audits every read
- The simulator with an external convergence observer and CSV traces
"""

from .agent_state import AgentState, build_agents
from .schedules import ScheduleKind, ScheduleSpec, AgentSampler
from .mailbox import ReadAudit, Mailbox
from .simulator import DistRun, RunResult, start_run, agent_update, run, policy_from_agents
from .trace_export import export_trace
from .rate_comparison import RateComparison, rate_ratio

__all__ = [
    # Agents
    "AgentState",
    "build_agents",

    # Schedules
    "ScheduleKind",
    "ScheduleSpec",
    "AgentSampler",

    # Messaging
    "ReadAudit",
    "Mailbox",

    # Simulation
    "DistRun",
    "RunResult",
    "start_run",
    "agent_update",
    "run",
    "policy_from_agents",
    "export_trace",

    # Rate comparison
    "RateComparison",
    "rate_ratio",
]
