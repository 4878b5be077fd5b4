"""
Bellman operator and value iteration.

This module provides:
- The operator T(p) = s + A'p + sum_i min{r_i + B_i'p, 0} E_i and its residual
- Monotone value iteration with fixed-point and divergence detection
- JSON and CSV export of solve results
"""

from .bellman_operator import (
    CostVector,
    as_cost_vector,
    reduced_costs,
    partition_minima,
    split_blocks,
    bellman_apply,
    homogeneous_apply,
    bellman_residual,
)
from .value_iterator import (
    SolveStatus,
    ValueIterationConfig,
    SolveReport,
    ValueIterator,
    value_iterate,
)
from .trace_exporter import report_to_dict, export_trace_csv

__all__ = [
    # Operator
    "CostVector",
    "as_cost_vector",
    "reduced_costs",
    "partition_minima",
    "split_blocks",
    "bellman_apply",
    "homogeneous_apply",
    "bellman_residual",

    # Value iteration
    "SolveStatus",
    "ValueIterationConfig",
    "SolveReport",
    "ValueIterator",
    "value_iterate",

    # Export
    "report_to_dict",
    "export_trace_csv",
]
