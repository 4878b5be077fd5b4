"""Subcommands of the posiflow command line"""
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from core.bellman import SolveStatus, ValueIterationConfig, ValueIterator, export_trace_csv, report_to_dict
from core.distsim import ScheduleKind, ScheduleSpec, export_trace, run, start_run
from core.lp import build_lp, export_lp_text, export_mps_text
from core.network import (
    build_flow_network,
    build_shortest_path,
    generate_cooling_instance,
    load_graph_spec,
)
from core.policy import export_trajectory_csv, extract_policy, policy_to_dict, simulate_closed_loop, verify_cost
from models.problem import load_problem, problem_to_dict, require_valid, validate
from models.problem.problem_codec import encode_vector
from utils.serialization import dumps, write_json, write_text
from utils.settings import Settings, get_settings
from .exit_codes import ExitCode, UsageError

logger = logging.getLogger("posiflow.cli")

STATUS_EXIT = {
    SolveStatus.FIXED_POINT: ExitCode.SUCCESS,
    SolveStatus.DIVERGED: ExitCode.DIVERGED,
    SolveStatus.MAX_ITERATIONS: ExitCode.MAX_ITERATIONS,
}


def _output_path(path: Optional[str]) -> Optional[Path]:
    """Check that an output path can be written before any work starts"""
    if path is None:
        return None
    target = Path(str(path))
    if not target.parent.is_dir():
        raise UsageError(f"Output directory does not exist: {target.parent}")
    return target


def _input_path(path: Any) -> Path:
    source = Path(str(path))
    if not source.is_file():
        raise FileNotFoundError(f"File not found: {source}")
    return source


class PosiflowCommands:
    """
    Optimal control of positive linear systems with coupled input constraints.

    Results go to stdout as JSON (or LP/MPS text), diagnostics to stderr.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings or get_settings()
        self.exit_code = ExitCode.SUCCESS

    def _emit(self, payload: Any) -> None:
        sys.stdout.write(payload if isinstance(payload, str) else dumps(payload))
        sys.stdout.flush()

    def _solve(self, problem, tol, max_iter, divergence_cap, record_trace=False, allow_unsafe=False):
        config = ValueIterationConfig(
            tol=self._settings.tol if tol is None else tol,
            max_iter=self._settings.max_iter if max_iter is None else max_iter,
            divergence_cap=self._settings.divergence_cap if divergence_cap is None else divergence_cap,
            record_trace=record_trace,
            allow_unsafe=allow_unsafe,
        )
        return ValueIterator(config).solve(problem)

    def validate(self, problem: str) -> None:
        """Check dimensions, signs and both positivity assumptions"""
        prob = load_problem(_input_path(problem))
        report = validate(prob)
        self._emit(report.model_dump(mode="json"))
        self.exit_code = ExitCode.SUCCESS if report.is_clean else ExitCode.VALIDATION_FAILED

    def solve(
        self,
        problem: str,
        tol: Optional[float] = None,
        max_iter: Optional[int] = None,
        divergence_cap: Optional[float] = None,
        trace: Optional[str] = None,
        allow_unsafe: bool = False,
    ) -> None:
        """Run value iteration and print the SolveReport"""
        source, trace_path = _input_path(problem), _output_path(trace)
        prob = load_problem(source)
        report = self._solve(prob, tol, max_iter, divergence_cap, trace_path is not None, allow_unsafe)
        if trace_path is not None:
            write_text(export_trace_csv(report), trace_path)
        self._emit(report_to_dict(report))
        self.exit_code = STATUS_EXIT[report.status]

    def policy(
        self,
        problem: str,
        x0: Optional[list] = None,
        horizon: int = 10,
        trajectory: Optional[str] = None,
        tol: Optional[float] = None,
    ) -> None:
        """Solve, extract the feedback policy and optionally simulate it from x0"""
        source, trajectory_path = _input_path(problem), _output_path(trajectory)
        if horizon < 0:
            raise UsageError("--horizon must be nonnegative")
        prob = load_problem(source)
        report = self._solve(prob, tol, None, None)
        if not report.converged:
            self._emit(report_to_dict(report))
            self.exit_code = STATUS_EXIT[report.status]
            return

        pol = extract_policy(prob, report.p)
        payload = {"p": encode_vector(report.p), "policy": policy_to_dict(prob, pol)}
        if x0 is not None:
            if not isinstance(x0, (list, tuple)):
                raise UsageError("--x0 must be a list such as [1,0,0]")
            check = verify_cost(prob, pol, report.p, x0, horizon)
            payload["simulation"] = {"horizon": horizon, **check.model_dump()}
            if trajectory_path is not None:
                path = simulate_closed_loop(prob, pol, x0, horizon)
                write_text(export_trajectory_csv(path), trajectory_path)
        self._emit(payload)
        self.exit_code = ExitCode.SUCCESS

    def lp_export(
        self,
        problem: str,
        format: str = "lp",
        output: Optional[str] = None,
        literal_sign: bool = False,
    ) -> None:
        """Write the LP of the Bellman equation in LP or MPS format"""
        if format not in ("lp", "mps"):
            raise UsageError(f"--format must be lp or mps, got {format!r}")
        source, output_path = _input_path(problem), _output_path(output)
        prob = load_problem(source)
        require_valid(prob, context="LP export")
        model = build_lp(prob, literal_sign=literal_sign)
        text = export_lp_text(model) if format == "lp" else export_mps_text(model)
        if output_path is None:
            self._emit(text)
        else:
            write_text(text, output_path)
        self.exit_code = ExitCode.SUCCESS

    def build(
        self,
        mode: str,
        graph: str,
        output: Optional[str] = None,
        allow_asymmetric: bool = False,
    ) -> None:
        """Turn a GraphSpec into a problem file (mode sp or flow)"""
        if mode not in ("sp", "flow"):
            raise UsageError(f"build mode must be sp or flow, got {mode!r}")
        source, output_path = _input_path(graph), _output_path(output)
        spec = load_graph_spec(source)
        if mode == "sp":
            prob = build_shortest_path(spec)
        else:
            prob = build_flow_network(spec, allow_asymmetric=allow_asymmetric)
        self._write_or_emit(problem_to_dict(prob), output_path)

    def generate(self, num_nodes: int, seed: int = 1, output: Optional[str] = None) -> None:
        """Draw a seeded cooling-network GraphSpec"""
        output_path = _output_path(output)
        spec = generate_cooling_instance(int(num_nodes), int(seed))
        self._write_or_emit(spec.model_dump(mode="json"), output_path)

    def distsim(
        self,
        problem: str,
        schedule: str = "uniform_random",
        seed: int = 0,
        window: Optional[int] = None,
        delay: int = 0,
        steps: int = 1_000_000,
        observer_tol: Optional[float] = None,
        trace: Optional[str] = None,
        wide: bool = False,
    ) -> None:
        """Simulate asynchronous distributed value iteration"""
        try:
            kind = ScheduleKind(schedule)
        except ValueError as e:
            choices = ", ".join(k.value for k in ScheduleKind)
            raise UsageError(f"--schedule must be one of {choices}") from e
        if delay < 0:
            raise UsageError("--delay must be nonnegative")
        tol = self._settings.observer_tol if observer_tol is None else observer_tol
        if tol <= 0:
            raise UsageError("--observer_tol must be positive")
        source, trace_path = _input_path(problem), _output_path(trace)
        prob = load_problem(source)
        spec = ScheduleSpec(kind=kind, seed=seed, window=window, step_limit=steps)
        dist_run = start_run(prob, spec, delay=delay)
        result = run(dist_run, observer_tol=tol)
        if trace_path is not None:
            write_text(export_trace(dist_run, wide=wide), trace_path)
        self._emit(
            {
                "converged": result.converged,
                "steps": result.steps,
                "p_hat": encode_vector(result.p_hat_final),
                "residual": result.residual,
            }
        )
        self.exit_code = ExitCode.SUCCESS if result.converged else ExitCode.STEP_LIMIT

    def _write_or_emit(self, payload: Any, output_path: Optional[Path]) -> None:
        if output_path is None:
            self._emit(payload)
        else:
            write_json(payload, output_path)
            logger.info("wrote %s", output_path)
        self.exit_code = ExitCode.SUCCESS
