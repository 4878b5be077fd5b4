"""Exports value iteration results as JSON payloads and CSV traces"""
from typing import Any, Dict

from utils.serialization import rows_to_csv
from .value_iterator import SolveReport


def report_to_dict(report: SolveReport) -> Dict[str, Any]:
    """JSON-ready summary of a solve"""
    return {
        "status": report.status.value,
        "p": [float(v) for v in report.p],
        "iterations": report.iterations,
        "residual_trace": [float(v) for v in report.residual_trace],
    }


def export_trace_csv(report: SolveReport) -> str:
    """
    Per-coordinate iterate trace with header ``iter,p_1,...,p_n``

    Raises:
        ValueError: If the solve was run without trace recording
    """
    if report.per_coordinate_trace is None:
        raise ValueError("Solve report has no per-coordinate trace; enable record_trace")
    n = report.p.size
    header = ["iter"] + [f"p_{i + 1}" for i in range(n)]
    rows = (
        [k] + [float(v) for v in snapshot]
        for k, snapshot in enumerate(report.per_coordinate_trace)
    )
    return rows_to_csv(header, rows)
