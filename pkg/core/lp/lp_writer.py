"""Deterministic LP and fixed-column MPS text for external solvers"""
from typing import List

from .lp_model import LpModel

NUMBER_FORMAT = "%.17g"


def _no_negative_zero(value: float) -> float:
    """Never print -0"""
    if value == 0:
        return 0.0
    return value


def format_number(value: float) -> str:
    return NUMBER_FORMAT % _no_negative_zero(float(value))


def _term(coef: float, name: str, first: bool) -> str:
    magnitude = abs(coef)
    body = name if magnitude == 1 else f"{format_number(magnitude)} {name}"
    if first:
        return f"-{body}" if coef < 0 else body
    return f" {'-' if coef < 0 else '+'} {body}"


def _expression(indices: List[int], values: List[float], labels: List[str]) -> str:
    if not indices:
        return f"0 {labels[0]}"
    return "".join(
        _term(value, labels[index], k == 0)
        for k, (index, value) in enumerate(zip(indices, values))
    )


def export_lp_text(model: LpModel) -> str:
    """
    Render the model in CPLEX LP format

    Rows keep the model order (Bellman rows first), terms are ordered by
    variable index and every variable gets an explicit ``>= 0`` bound.
    """
    objective = [(k, v) for k, v in enumerate(model.objective) if v != 0]
    lines = [
        "\\ posiflow linear program",
        "maximize",
        " obj: " + _expression([k for k, _ in objective], [v for _, v in objective], model.labels),
        "subject to",
    ]
    for row in model.rows:
        expression = _expression(row.indices, row.values, model.labels)
        lines.append(f" {row.name}: {expression} {row.sense} {format_number(row.rhs)}")
    lines.append("bounds")
    lines.extend(f" {label} >= 0" for label in model.labels)
    lines.append("end")
    return "\n".join(lines) + "\n"


def _field_line(first: str, second: str, value: float) -> str:
    return f"    {first:<8}  {second:<8}  {format_number(value):>12}"


def export_mps_text(model: LpModel, name: str = "POSIFLOW") -> str:
    """
    Render the model in fixed-column MPS format

    The objective row is ``obj`` with OBJSENSE MAX. Zero right-hand sides are
    omitted, as MPS defaults them to zero.
    """
    lines = [f"NAME          {name}", "OBJSENSE", "    MAX", "ROWS", " N  obj"]
    lines.extend(f" L  {row.name}" for row in model.rows)

    columns = [[] for _ in range(model.num_vars)]
    for k, value in enumerate(model.objective):
        if value != 0:
            columns[k].append(("obj", value))
    for row in model.rows:
        for index, value in zip(row.indices, row.values):
            columns[index].append((row.name, value))

    lines.append("COLUMNS")
    for label, entries in zip(model.labels, columns):
        for row_name, value in entries or [("obj", 0.0)]:
            lines.append(_field_line(label, row_name, value))

    lines.append("RHS")
    lines.extend(_field_line("RHS", row.name, row.rhs) for row in model.rows if row.rhs != 0)

    lines.append("BOUNDS")
    lines.extend(f" LO {'BND':<8}  {label:<8}  {format_number(0.0):>12}" for label in model.labels)
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"
