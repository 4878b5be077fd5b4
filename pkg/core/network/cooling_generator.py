"""Seeded random cooling networks of pipe pairs and dissipation sites"""
import logging
import math
from typing import Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field, model_validator

from core.bellman import value_iterate
from core.exceptions import RetryBudgetExhaustedError
from .graph_spec import EdgeSpec, GraphSpec, NodeSpec
from .network_builder import build_flow_network

logger = logging.getLogger("posiflow.network")


class GeneratorConfig(BaseModel):
    """Parameter ranges of generated cooling instances"""
    cost_range: Tuple[float, float] = (0.2, 1.0)
    efficiency_range: Tuple[float, float] = (0.95, 1.0)
    state_cost_range: Tuple[float, float] = (0.2, 1.0)
    retention_range: Tuple[float, float] = (0.4, 0.8)
    extra_edge_probability: float = Field(default=0.1, ge=0, le=1)
    diffusion_probability: float = Field(default=0.3, ge=0, le=1)
    max_diffusion_rate: float = Field(default=0.05, ge=0, le=1)
    max_retries: int = Field(default=10, ge=1)
    solve_max_iter: int = Field(default=100000, ge=1)

    @model_validator(mode="after")
    def _ordered_ranges(self) -> "GeneratorConfig":
        for name in ("cost_range", "efficiency_range", "state_cost_range", "retention_range"):
            low, high = getattr(self, name)
            if low > high:
                raise ValueError(f"{name} must be ordered (low, high)")
        if self.efficiency_range[0] <= 0 or self.efficiency_range[1] > 1:
            raise ValueError("efficiency_range must lie in (0, 1]")
        if self.retention_range[0] < 0 or self.retention_range[1] > 1:
            raise ValueError("retention_range must lie in [0, 1]")
        return self


class CoolingGenerator:
    """Draws connected pipe networks where some nodes dissipate heat"""

    def __init__(self, config: Optional[GeneratorConfig] = None):
        self.config = config or GeneratorConfig()

    def _pipes(self, rng: np.random.Generator, num_nodes: int) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(num_nodes))
        # random spanning tree keeps the network connected
        for k in range(1, num_nodes):
            graph.add_edge(k, int(rng.integers(0, k)))
        for a in range(num_nodes):
            for b in range(a + 1, num_nodes):
                if not graph.has_edge(a, b) and rng.uniform() < self.config.extra_edge_probability:
                    graph.add_edge(a, b)
        return graph

    def draw(self, num_nodes: int, rng: np.random.Generator) -> GraphSpec:
        """One random GraphSpec; not yet checked for a finite value"""
        cfg = self.config
        pipes = self._pipes(rng, num_nodes)

        dissipating = set(
            int(k) for k in rng.choice(num_nodes, size=math.ceil(num_nodes / 5), replace=False)
        )
        nodes = []
        for k in range(num_nodes):
            state_cost = float(rng.uniform(*cfg.state_cost_range))
            diffusion = []
            if k in dissipating:
                retention = float(rng.uniform(*cfg.retention_range))
            else:
                retention = 1.0
                neighbors = sorted(pipes.neighbors(k))
                if neighbors and rng.uniform() < cfg.diffusion_probability:
                    target = neighbors[int(rng.integers(0, len(neighbors)))]
                    rate = float(rng.uniform(0.0, cfg.max_diffusion_rate))
                    diffusion.append((target + 1, rate))
                    retention = 1.0 - rate
            nodes.append(
                NodeSpec(id=k + 1, state_cost=state_cost, retention=retention, diffusion=diffusion)
            )

        edges = []
        for a, b in sorted(tuple(sorted(e)) for e in pipes.edges()):
            cost = float(rng.uniform(*cfg.cost_range))
            efficiency = float(rng.uniform(*cfg.efficiency_range))
            edges.append(EdgeSpec(origin=a + 1, dest=b + 1, transport_cost=cost, efficiency=efficiency))
            edges.append(EdgeSpec(origin=b + 1, dest=a + 1, transport_cost=cost, efficiency=efficiency))
        edges.sort(key=lambda e: (e.origin, e.dest))
        return GraphSpec(nodes=nodes, edges=edges)

    def generate(self, num_nodes: int, seed: int) -> GraphSpec:
        """
        Draw until the instance has a finite value

        Attempt k draws from the generator seeded with (seed, k), so the
        result depends on the seed only.

        Raises:
            ValueError: If num_nodes < 2
            RetryBudgetExhaustedError: If every attempt diverges
        """
        if num_nodes < 2:
            raise ValueError("A cooling network needs at least 2 nodes")
        for attempt in range(self.config.max_retries):
            rng = np.random.default_rng([seed, attempt])
            spec = self.draw(num_nodes, rng)
            report = value_iterate(build_flow_network(spec), max_iter=self.config.solve_max_iter)
            if report.converged:
                logger.info(
                    "generated %d-node cooling instance (seed %d, attempt %d, %d iterations)",
                    num_nodes,
                    seed,
                    attempt,
                    report.iterations,
                )
                return spec
            logger.warning(
                "cooling instance (seed %d, attempt %d) ended with %s; redrawing",
                seed,
                attempt,
                report.status.value,
            )
        raise RetryBudgetExhaustedError(
            f"No convergent {num_nodes}-node instance after {self.config.max_retries} attempts"
        )


def generate_cooling_instance(
    num_nodes: int,
    seed: int,
    cost_range: Tuple[float, float] = (0.2, 1.0),
    efficiency_range: Tuple[float, float] = (0.95, 1.0),
    config: Optional[GeneratorConfig] = None,
) -> GraphSpec:
    """Seeded random cooling GraphSpec whose flow instance has a finite value"""
    config = config or GeneratorConfig(cost_range=cost_range, efficiency_range=efficiency_range)
    return CoolingGenerator(config).generate(num_nodes, seed)
