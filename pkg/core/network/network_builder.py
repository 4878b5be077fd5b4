"""Builds problem instances from graph descriptions"""
import logging
from typing import List

import numpy as np
import scipy.sparse as sp

from core.exceptions import GraphSpecError
from models.problem import ProblemData, validate
from .graph_spec import GraphSpec, check_graph_spec, check_pipe_symmetry

logger = logging.getLogger("posiflow.network")


def _incidence_blocks(g: GraphSpec) -> tuple[List[sp.csr_array], List[np.ndarray]]:
    """One B block per origin node: -1 at origin, efficiency at dest"""
    index = g.index_of()
    blocks, costs = [], []
    for group in g.edges_by_origin():
        rows, cols, vals = [], [], []
        for j, edge in enumerate(group):
            rows += [index[edge.origin], index[edge.dest]]
            cols += [j, j]
            vals += [-1.0, float(edge.efficiency)]
        blocks.append(
            sp.csr_array(
                sp.coo_array(
                    (np.array(vals, dtype=np.float64),
                     (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
                    shape=(g.n, len(group)),
                )
            )
        )
        costs.append(np.array([edge.transport_cost for edge in group], dtype=np.float64))
    return blocks, costs


def build_shortest_path(g: GraphSpec) -> ProblemData:
    """
    Shortest-path encoding: A = E = I and one incidence column per edge

    Args:
        g: Graph with a target, unit efficiencies and no dissipation

    Returns:
        ProblemData whose fixed point is the distance to the target

    Raises:
        GraphSpecError: If the target is missing, a non-target node has zero
            state cost, or the graph uses efficiencies, retention or diffusion
    """
    check_graph_spec(g)
    if g.target is None:
        raise GraphSpecError("Shortest-path mode needs a target node")
    for node in g.nodes:
        if node.retention != 1.0 or node.diffusion:
            raise GraphSpecError(f"Node {node.id}: shortest-path mode allows no dissipation")
        if node.id == g.target:
            if node.state_cost != 0:
                raise GraphSpecError(f"Target {node.id} must have zero state cost")
        elif node.state_cost <= 0:
            raise GraphSpecError(
                f"Node {node.id}: zero state cost makes waiting free, so the value "
                "would not be the path length; move some edge cost onto the node"
            )
    for edge in g.edges:
        if edge.efficiency != 1.0:
            raise GraphSpecError(f"Edge {edge.origin}->{edge.dest}: efficiency must be 1")

    blocks, costs = _incidence_blocks(g)
    identity = sp.csr_array(sp.identity(g.n))
    prob = ProblemData(
        n=g.n,
        M=g.n,
        A=identity,
        B_blocks=blocks,
        E=identity,
        s=[node.state_cost for node in g.nodes],
        r_blocks=costs,
    )
    logger.info("built shortest-path instance: %d nodes, %d edges", g.n, len(g.edges))
    return prob


def build_flow_network(g: GraphSpec, allow_asymmetric: bool = False) -> ProblemData:
    """
    Flow network: A from retention and diffusion, E = diag(retention)

    Args:
        g: Graph description
        allow_asymmetric: Accept pipes whose two directions differ

    Returns:
        ProblemData passing validation

    Raises:
        GraphSpecError: On conservation or efficiency violations, asymmetric
            pipes without override, or if the result fails validation
    """
    check_graph_spec(g)
    asymmetric = check_pipe_symmetry(g)
    if asymmetric:
        if not allow_asymmetric:
            raise GraphSpecError("; ".join(asymmetric))
        logger.warning("building flow network with %d asymmetric edge(s)", len(asymmetric))

    index = g.index_of()
    A = np.zeros((g.n, g.n))
    for k, node in enumerate(g.nodes):
        A[k, k] = node.retention
        for target, rate in node.diffusion:
            A[index[target], k] += rate

    blocks, costs = _incidence_blocks(g)
    prob = ProblemData(
        n=g.n,
        M=g.n,
        A=A,
        B_blocks=blocks,
        E=np.diag(np.diag(A)),
        s=[node.state_cost for node in g.nodes],
        r_blocks=costs,
    )
    report = validate(prob)
    if not report.is_clean:
        raise GraphSpecError(
            "Flow network fails validation: "
            + "; ".join(v.description for v in report.violations)
        )
    logger.info("built flow network: %d nodes, %d edges", g.n, len(g.edges))
    return prob
